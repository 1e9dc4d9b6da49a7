#pragma once

#include <vector>

#include "copzero/matrix.hpp"

namespace copzero {

// Exact kernels run fraction-free (Bareiss) elimination over the rationals;
// float kernels are SVD/LU based with the matrix's tolerance policy.

int rank(const SymMatrix<Rational>& a);
int rank(const SymMatrix<double>& a);

Rational determinant(const SymMatrix<Rational>& a);
double determinant(const SymMatrix<double>& a);

// Mode's determinant-is-zero test: exact equality, or |det| measured against
// the Hadamard bound of the matrix.
bool determinant_is_zero(const SymMatrix<Rational>& a);
bool determinant_is_zero(const SymMatrix<double>& a);

// Null-space basis, each vector canonicalized: first nonzero component
// positive, l1 norm 1.
std::vector<std::vector<Rational>> kernel_basis(const SymMatrix<Rational>& a);
std::vector<std::vector<double>> kernel_basis(const SymMatrix<double>& a);

// Unique solution of A x = b; throws SingularSystemError when the mode's
// zero test declares A singular.
std::vector<Rational> solve(const SymMatrix<Rational>& a, const std::vector<Rational>& b);
std::vector<double> solve(const SymMatrix<double>& a, const std::vector<double>& b);

}  // namespace copzero

#pragma once

#include <optional>
#include <vector>

#include "copzero/matrix.hpp"
#include "copzero/simplex_grid.hpp"

namespace copzero {

enum class CopositivityMethod { principal_eigen, grid };

inline const char* method_name(CopositivityMethod m) {
  return m == CopositivityMethod::principal_eigen ? "principal-eigen" : "grid";
}

template <typename S>
struct CopositivityVerdict {
  bool is_copositive = false;
  std::optional<std::vector<S>> witness;  // t >= 0, ||t||_1 = 1, t^T X t < 0
  CopositivityMethod method = CopositivityMethod::principal_eigen;
};

struct CopositivityLimits {
  int max_dim = 16;  // 2^p principal submatrices get scanned
};

// Eigen criterion: X is copositive iff no principal submatrix has a strictly
// positive eigenvector for a negative eigenvalue. The exact overload reruns
// borderline float decisions through an exact grid scan at N = 12.
CopositivityVerdict<double> check_copositive(const SymMatrix<double>& x, CopositivityLimits lim = {});
CopositivityVerdict<Rational> check_copositive(const SymMatrix<Rational>& x, CopositivityLimits lim = {});

}  // namespace copzero

#include <Eigen/Dense>
#include <cmath>

#include "copzero/linalg.hpp"

namespace copzero {

namespace {

Eigen::MatrixXd to_eigen(const SymMatrix<double>& a) {
  Eigen::MatrixXd m(a.dim(), a.dim());
  for (int k = 0; k < a.dim(); ++k)
    for (int q = 0; q < a.dim(); ++q) m(k, q) = a.at(k, q);
  return m;
}

}  // namespace

int rank(const SymMatrix<double>& a) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(a));
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double cutoff = a.tol().rank_eps * sv(0);
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff && sv(i) > 0) ++r;
  return r;
}

double determinant(const SymMatrix<double>& a) {
  return Eigen::PartialPivLU<Eigen::MatrixXd>(to_eigen(a)).determinant();
}

bool determinant_is_zero(const SymMatrix<double>& a) {
  // |det| against the Hadamard bound keeps the test scale-free.
  const Eigen::MatrixXd m = to_eigen(a);
  double bound = 1.0;
  for (int i = 0; i < m.rows(); ++i) bound *= m.row(i).norm();
  return std::fabs(determinant(a)) < a.tol().zero_eps * std::max(1.0, bound);
}

std::vector<std::vector<double>> kernel_basis(const SymMatrix<double>& a) {
  const int n = a.dim();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(a), Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = sv.size() > 0 ? a.tol().rank_eps * sv(0) : 0.0;

  std::vector<std::vector<double>> basis;
  for (int i = 0; i < n; ++i) {
    if (i < sv.size() && sv(i) > cutoff && sv(i) > 0) continue;
    Eigen::VectorXd v = svd.matrixV().col(i);
    int first = -1;
    double norm = 0;
    for (int j = 0; j < n; ++j) {
      if (first < 0 && std::fabs(v(j)) > a.tol().zero_eps) first = j;
      norm += std::fabs(v(j));
    }
    if (first >= 0 && v(first) < 0) v = -v;
    basis.emplace_back(v.data(), v.data() + n);
    for (double& x : basis.back()) x /= norm;
  }
  return basis;
}

std::vector<double> solve(const SymMatrix<double>& a, const std::vector<double>& b) {
  const int n = a.dim();
  if (static_cast<int>(b.size()) != n) throw std::invalid_argument("dimension mismatch");
  if (determinant_is_zero(a)) throw SingularSystemError("singular system");
  const Eigen::VectorXd x =
      Eigen::PartialPivLU<Eigen::MatrixXd>(to_eigen(a)).solve(Eigen::Map<const Eigen::VectorXd>(b.data(), n));
  return {x.data(), x.data() + n};
}

}  // namespace copzero

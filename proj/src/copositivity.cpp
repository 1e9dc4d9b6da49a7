#include <Eigen/Dense>
#include <cmath>

#include "copzero/copositivity.hpp"

namespace copzero {

namespace {

struct EigenScan {
  bool copositive = true;
  bool borderline = false;            // some decision was too close to call
  std::vector<double> witness;        // l1-normalized, zero-padded to p
};

// Scans every principal submatrix for a strictly positive eigenvector with a
// negative eigenvalue. `band` widens the dead zone around both sign tests;
// anything landing inside it only flags `borderline`.
EigenScan scan_principal_eigen(const SymMatrix<double>& x, double band) {
  EigenScan out;
  const int p = x.dim();
  const Tolerances& tol = x.tol();
  const double scale = x.zero_scale();

  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << p); ++mask) {
    const SupportSet pbar = SupportSet::from_mask(mask);
    const std::vector<int> ids = pbar.indices();
    const int n = pbar.size();

    Eigen::MatrixXd b(n, n);
    for (int k = 0; k < n; ++k)
      for (int q = 0; q < n; ++q) b(k, q) = x.at(ids[static_cast<std::size_t>(k)], ids[static_cast<std::size_t>(q)]);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b);
    for (int i = 0; i < n; ++i) {
      const double lambda = es.eigenvalues()(i);
      if (lambda >= band * scale) continue;

      Eigen::VectorXd v = es.eigenvectors().col(i);
      int arg = 0;
      v.cwiseAbs().maxCoeff(&arg);
      if (v(arg) < 0) v = -v;

      const bool strictly_positive = (v.array() > tol.positivity_eps).all();
      const bool nearly_nonnegative = (v.array() > -band).all();
      const bool clearly_negative = lambda < -tol.zero_eps * scale;

      if (strictly_positive && clearly_negative) {
        out.copositive = false;
        out.witness.assign(static_cast<std::size_t>(p), 0.0);
        const double l1 = v.lpNorm<1>();
        for (int k = 0; k < n; ++k) out.witness[static_cast<std::size_t>(ids[static_cast<std::size_t>(k)])] = v(k) / l1;
        return out;
      }
      if (nearly_nonnegative) out.borderline = true;  // too close to trust
    }
  }
  return out;
}

void check_dim(int p, const CopositivityLimits& lim) {
  if (p > lim.max_dim)
    throw ResourceLimitError("copositivity check limited to dimension " + std::to_string(lim.max_dim) +
                             " (got " + std::to_string(p) + ")");
}

}  // namespace

CopositivityVerdict<double> check_copositive(const SymMatrix<double>& x, CopositivityLimits lim) {
  check_dim(x.dim(), lim);
  const EigenScan scan = scan_principal_eigen(x, 0.0);
  CopositivityVerdict<double> v;
  v.is_copositive = scan.copositive;
  v.method = CopositivityMethod::principal_eigen;
  if (!scan.copositive) v.witness = scan.witness;
  return v;
}

CopositivityVerdict<Rational> check_copositive(const SymMatrix<Rational>& x, CopositivityLimits lim) {
  check_dim(x.dim(), lim);
  // exact symmetric eigendecomposition is out of reach; run the float scan
  // with a widened band and settle anything doubtful exactly on the grid
  constexpr double widened_band = 1e-7;
  const EigenScan scan = scan_principal_eigen(to_float(x), widened_band);

  CopositivityVerdict<Rational> v;
  v.method = CopositivityMethod::principal_eigen;

  if (!scan.copositive) {
    // certify the float witness exactly before trusting it
    std::vector<Rational> w;
    Rational l1{0};
    for (double c : scan.witness) {
      w.push_back(Rational::from_double(c));
      l1 += w.back();
    }
    for (auto& c : w) c /= l1;
    if (quad_form(x, w).sign() < 0) {
      v.is_copositive = false;
      v.witness = std::move(w);
      return v;
    }
    // fall through to the grid: the float witness did not survive
  } else if (!scan.borderline) {
    v.is_copositive = true;
    return v;
  }

  const GridMinResult<Rational> g = grid_min(x, 12);
  v.method = CopositivityMethod::grid;
  v.is_copositive = g.min_value.sign() >= 0;
  if (!v.is_copositive) {
    std::vector<Rational> w;
    w.reserve(g.argmin.size());
    for (int m : g.argmin) w.emplace_back(static_cast<long>(m), static_cast<long>(g.denominator));
    v.witness = std::move(w);
  }
  return v;
}

}  // namespace copzero

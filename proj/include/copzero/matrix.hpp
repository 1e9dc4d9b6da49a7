#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "copzero/common.hpp"
#include "copzero/support_set.hpp"

namespace copzero {

/// Dense symmetric p×p matrix over an exact rational or float scalar.
/// Symmetry is enforced on ingestion; entries are stored fully.
template <typename S>
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int p, Tolerances tol = {}) : p_(check_dim(p)), a_(static_cast<std::size_t>(p) * p, S{}), tol_(tol) {
    tol_.validate();
  }

  // Checks symmetry: exact equality in exact mode; in float mode entries may
  // differ by zero_eps * (1 + max|entry|) and are then symmetrized.
  static SymMatrix from_rows(const std::vector<std::vector<S>>& rows, Tolerances tol = {});

  int dim() const { return p_; }
  const Tolerances& tol() const { return tol_; }

  const S& at(int k, int q) const { return a_[idx(k, q)]; }
  void set(int k, int q, S v) {
    a_[idx(k, q)] = v;
    a_[idx(q, k)] = std::move(v);
  }

  // 1 + max|entry|, the scale factor for float-mode zero tests.
  double zero_scale() const {
    double m = 0;
    for (const S& v : a_) m = std::max(m, std::fabs(scalar_to_double(v)));
    return 1.0 + m;
  }

  bool entry_is_zero(int k, int q) const {
    return scalar_is_zero(at(k, q), tol_, zero_scale());
  }

 private:
  static int check_dim(int p) {
    if (p < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    if (p > SupportSet::max_dim) throw std::invalid_argument("matrix dimension too large");
    return p;
  }
  std::size_t idx(int k, int q) const {
    if (k < 0 || k >= p_ || q < 0 || q >= p_) throw std::out_of_range("matrix index");
    return static_cast<std::size_t>(k) * p_ + q;
  }

  int p_ = 0;
  std::vector<S> a_;
  Tolerances tol_;
};

template <typename S>
SymMatrix<S> SymMatrix<S>::from_rows(const std::vector<std::vector<S>>& rows, Tolerances tol) {
  const int p = static_cast<int>(rows.size());
  SymMatrix m(p, tol);
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != p) throw std::invalid_argument("matrix rows must be square");
  if constexpr (mode_of<S> == Mode::floating) {
    double mx = 0;
    for (const auto& r : rows)
      for (double v : r) {
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite matrix entry");
        mx = std::max(mx, std::fabs(v));
      }
    const double band = tol.zero_eps * (1.0 + mx);
    for (int k = 0; k < p; ++k)
      for (int q = k; q < p; ++q) {
        if (std::fabs(scalar_to_double(rows[k][q]) - scalar_to_double(rows[q][k])) > band)
          throw std::invalid_argument("matrix not symmetric within tolerance");
        m.set(k, q, (rows[k][q] + rows[q][k]) / S{2});
      }
  } else {
    for (int k = 0; k < p; ++k)
      for (int q = k; q < p; ++q) {
        if (!(rows[k][q] == rows[q][k])) throw std::invalid_argument("matrix not symmetric");
        m.set(k, q, rows[k][q]);
      }
  }
  return m;
}

/// Rows/columns of X restricted to Pbar, ascending index order.
template <typename S>
SymMatrix<S> principal_submatrix(const SymMatrix<S>& x, SupportSet pbar) {
  if (pbar.empty()) throw std::invalid_argument("empty index set");
  const std::vector<int> ids = pbar.indices();
  for (int i : ids)
    if (i >= x.dim()) throw std::invalid_argument("index set exceeds matrix dimension");
  const int n = static_cast<int>(ids.size());
  SymMatrix<S> sub(n, x.tol());
  for (int k = 0; k < n; ++k)
    for (int q = k; q < n; ++q) sub.set(k, q, x.at(ids[k], ids[q]));
  return sub;
}

template <typename S>
std::vector<S> mat_vec(const SymMatrix<S>& x, const std::vector<S>& t) {
  if (static_cast<int>(t.size()) != x.dim()) throw std::invalid_argument("dimension mismatch");
  std::vector<S> out(t.size(), S{});
  for (int k = 0; k < x.dim(); ++k) {
    S acc{};
    for (int q = 0; q < x.dim(); ++q) acc += x.at(k, q) * t[q];
    out[static_cast<std::size_t>(k)] = std::move(acc);
  }
  return out;
}

template <typename S>
S quad_form(const SymMatrix<S>& x, const std::vector<S>& t) {
  const std::vector<S> xt = mat_vec(x, t);
  S acc{};
  for (std::size_t k = 0; k < t.size(); ++k) acc += t[k] * xt[k];
  return acc;
}

inline SymMatrix<double> to_float(const SymMatrix<Rational>& x) {
  SymMatrix<double> out(x.dim(), x.tol());
  for (int k = 0; k < x.dim(); ++k)
    for (int q = k; q < x.dim(); ++q) out.set(k, q, x.at(k, q).to_double());
  return out;
}

}  // namespace copzero

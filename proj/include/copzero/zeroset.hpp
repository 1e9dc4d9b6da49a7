#pragma once

#include <vector>

#include "copzero/simplex_grid.hpp"
#include "copzero/zerograph.hpp"

namespace copzero {

/// Checks t >= 0 componentwise and ||t||_1 = 1, per the mode's zero test.
template <typename S>
void validate_simplex_point(const std::vector<S>& t, const Tolerances& tol) {
  S sum{};
  for (const S& v : t) {
    if constexpr (mode_of<S> == Mode::exact) {
      if (v.sign() < 0) throw std::invalid_argument("simplex point has a negative component");
    } else {
      if (!std::isfinite(v)) throw std::invalid_argument("simplex point has a non-finite component");
      if (v < -tol.zero_eps) throw std::invalid_argument("simplex point has a negative component");
    }
    sum += v;
  }
  if (!scalar_is_zero(sum - S{1}, tol, static_cast<double>(t.size())))
    throw std::invalid_argument("simplex point components must sum to 1");
}

/// Support of a nonnegative vector: indices of strictly positive components.
template <typename S>
SupportSet support_of(const std::vector<S>& t, const Tolerances& tol) {
  SupportSet s;
  for (int k = 0; k < static_cast<int>(t.size()); ++k)
    if (scalar_is_positive(t[static_cast<std::size_t>(k)], tol)) s.add(k);
  return s;
}

/// t^T X t = 0 (float: |t^T X t| < zero_eps * (1 + max|X|)).
template <typename S>
bool is_zero(const SymMatrix<S>& x, const std::vector<S>& t) {
  return scalar_is_zero(quad_form(x, t), x.tol(), x.zero_scale());
}

/// Components whose polytope contains t: { s : supp(t) ⊆ P*(s) } when t is a
/// zero of X, empty otherwise.
template <typename S>
std::vector<int> component_membership(const Representation& rep, const SymMatrix<S>& x,
                                      const std::vector<S>& t) {
  validate_simplex_point(t, x.tol());
  std::vector<int> out;
  if (!is_zero(x, t)) return out;
  const SupportSet supp = support_of(t, x.tol());
  for (const auto& comp : rep.components)
    if (supp.subset_of(comp.p_star)) out.push_back(comp.s);
  return out;
}

/// Convex combination of a component's minimal zeros; always lands in T0.
template <typename S>
std::vector<S> sample_component(const std::vector<MinimalZero<S>>& zeros, const Representation& rep,
                                const SymMatrix<S>& x, int s, const std::vector<S>& weights) {
  if (s < 0 || s >= static_cast<int>(rep.components.size()))
    throw std::invalid_argument("component index out of range");
  const std::vector<int> members = rep.components[static_cast<std::size_t>(s)].members.indices();
  if (weights.size() != members.size())
    throw std::invalid_argument("weight vector length must match the component's clique");
  validate_simplex_point(weights, x.tol());

  std::vector<S> t(static_cast<std::size_t>(x.dim()), S{});
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& tau = zeros[static_cast<std::size_t>(members[i])].tau;
    for (std::size_t k = 0; k < t.size(); ++k) t[k] += weights[i] * tau[k];
  }
  if (!is_zero(x, t)) throw std::logic_error("sampled point is not a zero");
  return t;
}

/// Exhaustive grid validation of the representation: every grid zero must be
/// covered by some component; non-zeros have empty membership by definition.
struct OracleReport {
  std::size_t points = 0;
  std::size_t zeros_found = 0;
  std::vector<std::vector<int>> violations;  // grid numerators of uncovered zeros
  bool ok() const { return violations.empty(); }
};

template <typename S>
OracleReport oracle_equivalence(const SymMatrix<S>& x, const Representation& rep, int n,
                                GridLimits lim = {}, Exec exec = Exec::parallel) {
  std::vector<SupportSet> pstars;
  pstars.reserve(rep.components.size());
  for (const auto& comp : rep.components) pstars.push_back(comp.p_star);
  GridCoverReport cover = grid_cover(x, pstars, n, lim, exec);
  OracleReport out;
  out.points = cover.points;
  out.zeros_found = cover.zeros;
  out.violations = std::move(cover.uncovered);
  return out;
}

}  // namespace copzero

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "copzero/linalg.hpp"
#include "copzero/matrix.hpp"
#include "copzero/support_set.hpp"

namespace copzero {

/// A normalized minimal zero: tau >= 0, ||tau||_1 = 1, tau^T X tau = 0,
/// support = exact set of strictly positive components.
template <typename S>
struct MinimalZero {
  int j = -1;  // 0-based position in the (cardinality, mask)-sorted family
  std::vector<S> tau;
  SupportSet support;
};

template <typename S>
struct ConditionBResult {
  bool holds = false;
  std::vector<S> kernel_vector;    // values on Pbar in ascending index order, l1 norm 1
  std::vector<int> borderline;     // float mode: rejected components in (eps/10, eps]
};

/// Condition (A): rank of X(Pbar) is |Pbar| - 1.
template <typename S>
bool check_condition_A(const SymMatrix<S>& x, SupportSet pbar) {
  return rank(principal_submatrix(x, pbar)) == pbar.size() - 1;
}

/// The (B)-test with an explicit pivot choice. Assumes condition (A) holds
/// for pbar; under (A) the result does not depend on the pivot.
template <typename S>
ConditionBResult<S> condition_b_with_pivot(const SymMatrix<S>& x, SupportSet pbar, int pivot) {
  if (!pbar.contains(pivot)) throw std::invalid_argument("pivot not in index set");
  ConditionBResult<S> out;
  const SupportSet rest = pbar.minus(SupportSet::of({pivot}));

  std::vector<S> y;
  if (!rest.empty()) {
    const SymMatrix<S> a = principal_submatrix(x, rest);
    // det X(Pbar \ i*) = 0 rules condition (B) out before any solve
    if (determinant_is_zero(a)) return out;
    std::vector<S> rhs;
    rhs.reserve(static_cast<std::size_t>(rest.size()));
    for (int k : rest.indices()) rhs.push_back(-x.at(k, pivot));
    y = solve(a, rhs);

    const Tolerances& tol = x.tol();
    bool positive = true;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (scalar_is_positive(y[i], tol)) continue;
      positive = false;
      if constexpr (mode_of<S> == Mode::floating) {
        const double v = y[i];
        if (v > tol.positivity_eps / 10 && v <= tol.positivity_eps)
          out.borderline.push_back(rest.indices()[i]);
      }
    }
    if (!positive) return out;
  }

  // kernel vector = (y, 1 at pivot) / beta, beta = 1 + ||y||_1
  S beta{1};
  for (const S& v : y) beta += v;
  out.holds = true;
  out.kernel_vector.reserve(static_cast<std::size_t>(pbar.size()));
  std::size_t yi = 0;
  for (int k : pbar.indices()) {
    if (k == pivot)
      out.kernel_vector.push_back(S{1} / beta);
    else
      out.kernel_vector.push_back(y[yi++] / beta);
  }
  return out;
}

/// Condition (B): existence of a strictly positive kernel vector of X(Pbar).
/// Contract: condition (A) must hold and |Pbar| >= 2 (singletons are the
/// algorithm's Step 1). Pivot is the smallest index of Pbar.
template <typename S>
ConditionBResult<S> check_condition_B(const SymMatrix<S>& x, SupportSet pbar) {
  if (pbar.size() < 2) throw std::invalid_argument("condition (B) test needs |Pbar| >= 2");
  if (!check_condition_A(x, pbar)) throw std::invalid_argument("condition (A) does not hold for Pbar");
  return condition_b_with_pivot(x, pbar, pbar.min_index());
}

/// Scatters the kernel vector over {0..p-1}: tau = kernel on Pbar, 0 elsewhere.
template <typename S>
MinimalZero<S> build_minimal_zero(const SymMatrix<S>& x, SupportSet pbar, const ConditionBResult<S>& b) {
  if (!b.holds) throw std::invalid_argument("condition (B) result does not hold");
  MinimalZero<S> z;
  z.support = pbar;
  z.tau.assign(static_cast<std::size_t>(x.dim()), S{});
  std::size_t i = 0;
  for (int k : pbar.indices()) z.tau[static_cast<std::size_t>(k)] = b.kernel_vector[i++];
  return z;
}

template <typename S>
struct MinimalZeroSet {
  std::vector<MinimalZero<S>> zeros;       // (cardinality, mask) order, j assigned
  std::vector<std::string> warnings;       // float-mode borderline sign decisions
};

/// Enumerates all normalized minimal zeros: Step 1 takes the zero-diagonal
/// basis vectors and removes their indices; Step k tests every remaining
/// k-subset not containing an accepted support against (A) and (B).
template <typename S>
MinimalZeroSet<S> enumerate_minimal_zeros(const SymMatrix<S>& x, Exec exec = Exec::parallel) {
  MinimalZeroSet<S> out;
  const int p = x.dim();
  const double scale = x.zero_scale();

  SupportSet remaining;
  for (int k = 0; k < p; ++k) {
    if (scalar_is_zero(x.at(k, k), x.tol(), scale)) {
      MinimalZero<S> z;
      z.support = SupportSet::of({k});
      z.tau.assign(static_cast<std::size_t>(p), S{});
      z.tau[static_cast<std::size_t>(k)] = S{1};
      out.zeros.push_back(std::move(z));
    } else {
      remaining.add(k);
    }
  }

  std::vector<SupportSet> accepted;
  for (const auto& z : out.zeros) accepted.push_back(z.support);

  for (int k = 2; k <= remaining.size(); ++k) {
    std::vector<SupportSet> cands;
    for (SupportSet c : k_subsets(remaining, k)) {
      const bool pruned = std::any_of(accepted.begin(), accepted.end(),
                                      [&](SupportSet s) { return s.subset_of(c); });
      if (!pruned) cands.push_back(c);
    }

    const int n = static_cast<int>(cands.size());
    std::vector<std::optional<MinimalZero<S>>> found(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> borderline(static_cast<std::size_t>(n));

#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
    for (int i = 0; i < n; ++i) {
      const SupportSet c = cands[static_cast<std::size_t>(i)];
      if (!check_condition_A(x, c)) continue;
      ConditionBResult<S> b = condition_b_with_pivot(x, c, c.min_index());
      borderline[static_cast<std::size_t>(i)] = b.borderline;
      if (b.holds) found[static_cast<std::size_t>(i)] = build_minimal_zero(x, c, b);
    }

    for (int i = 0; i < n; ++i) {
      for (int comp : borderline[static_cast<std::size_t>(i)])
        out.warnings.push_back("borderline (B)-test component " + std::to_string(comp + 1) +
                               " rejected for candidate support " + cands[static_cast<std::size_t>(i)].str());
      if (found[static_cast<std::size_t>(i)]) {
        accepted.push_back(found[static_cast<std::size_t>(i)]->support);
        out.zeros.push_back(std::move(*found[static_cast<std::size_t>(i)]));
      }
    }
  }

  std::sort(out.zeros.begin(), out.zeros.end(), [](const MinimalZero<S>& a, const MinimalZero<S>& b) {
    return SupportSet::size_mask_less(a.support, b.support);
  });
  for (int j = 0; j < static_cast<int>(out.zeros.size()); ++j) out.zeros[static_cast<std::size_t>(j)].j = j;
  return out;
}

/// Minimality forces pairwise incomparable supports: none may contain another.
inline bool verify_support_incomparability(const std::vector<SupportSet>& supports) {
  for (std::size_t i = 0; i < supports.size(); ++i)
    for (std::size_t j = 0; j < supports.size(); ++j)
      if (i != j && supports[i].subset_of(supports[j])) return false;
  return true;
}

}  // namespace copzero

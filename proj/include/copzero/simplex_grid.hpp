#pragma once

#include <cstddef>
#include <limits>
#include <numeric>
#include <vector>

#include "copzero/matrix.hpp"

namespace copzero {

struct GridLimits {
  std::size_t max_points = 2'000'000;
};

/// Number of grid points t = m/N on the simplex: C(N+p-1, p-1), saturating.
inline std::size_t simplex_grid_size(int p, int N) {
  constexpr auto cap = std::numeric_limits<std::size_t>::max();
  std::size_t r = 1;
  for (int i = 1; i <= p - 1; ++i) {
    const auto f = static_cast<std::size_t>(N) + static_cast<std::size_t>(i);
    if (r > cap / f) return cap;
    r = r * f / static_cast<std::size_t>(i);
  }
  return r;
}

/// Successor of a composition in descending lexicographic order; the first
/// composition is (N, 0, ..., 0). Returns false after the last one.
inline bool next_composition(std::vector<int>& m) {
  const int n = static_cast<int>(m.size());
  int i = -1;
  for (int k = n - 2; k >= 0; --k)
    if (m[static_cast<std::size_t>(k)] > 0) {
      i = k;
      break;
    }
  if (i < 0) return false;
  int rest = 0;
  for (int k = i + 1; k < n; ++k) {
    rest += m[static_cast<std::size_t>(k)];
    m[static_cast<std::size_t>(k)] = 0;
  }
  m[static_cast<std::size_t>(i)] -= 1;
  m[static_cast<std::size_t>(i) + 1] = rest + 1;
  return true;
}

/// m^T X m, the quadratic form numerator of t = m/N.
template <typename S>
S grid_point_value(const SymMatrix<S>& x, const std::vector<int>& m) {
  S acc{};
  const int p = x.dim();
  for (int i = 0; i < p; ++i) {
    if (m[static_cast<std::size_t>(i)] == 0) continue;
    S row{};
    for (int j = 0; j < p; ++j) {
      if (m[static_cast<std::size_t>(j)] == 0) continue;
      row += x.at(i, j) * S(m[static_cast<std::size_t>(j)]);
    }
    acc += S(m[static_cast<std::size_t>(i)]) * row;
  }
  return acc;
}

template <typename S>
struct GridMinResult {
  S min_value{};           // min of t^T X t over the grid
  std::vector<int> argmin; // numerators m of the first minimizer in scan order
  int denominator = 1;
  std::size_t points = 0;
};

namespace detail {

inline void check_grid(int p, int N, const GridLimits& lim, std::size_t& total) {
  if (N < 1) throw std::invalid_argument("grid denominator must be >= 1");
  total = simplex_grid_size(p, N);
  if (total > lim.max_points)
    throw ResourceLimitError("simplex grid of " + std::to_string(total) +
                             " points exceeds cap of " + std::to_string(lim.max_points));
}

template <typename S, typename Visit>
void scan_chunk_serial(const SymMatrix<S>& x, int first, int rest, Visit&& visit) {
  // all grid points with m[0] == first, tail summing to rest, in scan order
  const int p = x.dim();
  std::vector<int> m(static_cast<std::size_t>(p), 0);
  m[0] = first;
  if (p == 1) {
    visit(m);
    return;
  }
  m[1] = rest;
  std::vector<int> tail(m.begin() + 1, m.end());
  do {
    std::copy(tail.begin(), tail.end(), m.begin() + 1);
    visit(m);
  } while (next_composition(tail));
}

}  // namespace detail

template <typename S>
GridMinResult<S> grid_min_serial(const SymMatrix<S>& x, int N, GridLimits lim = {}) {
  GridMinResult<S> out;
  detail::check_grid(x.dim(), N, lim, out.points);
  out.denominator = N;

  std::vector<int> m(static_cast<std::size_t>(x.dim()), 0);
  m[0] = N;
  S best = grid_point_value(x, m);
  std::vector<int> best_m = m;
  while (next_composition(m)) {
    S q = grid_point_value(x, m);
    if (q < best) {  // strict: ties keep the earlier point in scan order
      best = std::move(q);
      best_m = m;
    }
  }
  out.min_value = best / (S(N) * S(N));
  out.argmin = std::move(best_m);
  return out;
}

template <typename S>
GridMinResult<S> grid_min_parallel(const SymMatrix<S>& x, int N, GridLimits lim = {}) {
  GridMinResult<S> out;
  detail::check_grid(x.dim(), N, lim, out.points);
  out.denominator = N;

  const int chunks = N + 1;  // chunk c holds the points with m[0] == N - c
  std::vector<S> best(static_cast<std::size_t>(chunks));
  std::vector<std::vector<int>> best_m(static_cast<std::size_t>(chunks));
  std::vector<char> nonempty(static_cast<std::size_t>(chunks), 0);

#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < chunks; ++c) {
    const int first = N - c;
    if (x.dim() == 1 && first != N) continue;
    S local{};
    std::vector<int> local_m;
    detail::scan_chunk_serial(x, first, N - first, [&](const std::vector<int>& m) {
      S q = grid_point_value(x, m);
      if (local_m.empty() || q < local) {
        local = std::move(q);
        local_m = m;
      }
    });
    best[static_cast<std::size_t>(c)] = std::move(local);
    best_m[static_cast<std::size_t>(c)] = std::move(local_m);
    nonempty[static_cast<std::size_t>(c)] = !best_m[static_cast<std::size_t>(c)].empty();
  }

  int winner = -1;
  for (int c = 0; c < chunks; ++c) {
    if (!nonempty[static_cast<std::size_t>(c)]) continue;
    if (winner < 0 || best[static_cast<std::size_t>(c)] < best[static_cast<std::size_t>(winner)]) winner = c;
  }
  out.min_value = best[static_cast<std::size_t>(winner)] / (S(N) * S(N));
  out.argmin = best_m[static_cast<std::size_t>(winner)];
  return out;
}

template <typename S>
GridMinResult<S> grid_min(const SymMatrix<S>& x, int N, GridLimits lim = {}, Exec exec = Exec::parallel) {
  return exec == Exec::serial ? grid_min_serial(x, N, lim) : grid_min_parallel(x, N, lim);
}

/// Grid sweep checking that every zero on the grid has its support inside
/// some P*(s). Violations are reported in scan order.
struct GridCoverReport {
  std::size_t points = 0;
  std::size_t zeros = 0;
  std::vector<std::vector<int>> uncovered;  // numerators m of offending zeros
};

namespace detail {

template <typename S>
struct CoverCtx {
  const SymMatrix<S>& x;
  const std::vector<SupportSet>& pstars;
  double scale;  // float-mode zero test: |t^T X t| < zero_eps * (1 + max|X|)
  int N;

  bool is_grid_zero(const S& q) const {
    if constexpr (mode_of<S> == Mode::exact)
      return q.sign() == 0;
    else
      return std::fabs(q) / (static_cast<double>(N) * N) < x.tol().zero_eps * scale;
  }

  bool process(const std::vector<int>& m, std::size_t& zeros, std::vector<std::vector<int>>& uncovered) const {
    const S q = grid_point_value(x, m);
    if (!is_grid_zero(q)) return false;
    ++zeros;
    SupportSet supp;
    for (int i = 0; i < static_cast<int>(m.size()); ++i)
      if (m[static_cast<std::size_t>(i)] > 0) supp.add(i);
    for (const SupportSet& ps : pstars)
      if (supp.subset_of(ps)) return true;
    uncovered.push_back(m);
    return true;
  }
};

}  // namespace detail

template <typename S>
GridCoverReport grid_cover_serial(const SymMatrix<S>& x, const std::vector<SupportSet>& pstars, int N,
                                  GridLimits lim = {}) {
  GridCoverReport out;
  detail::check_grid(x.dim(), N, lim, out.points);
  detail::CoverCtx<S> ctx{x, pstars, x.zero_scale(), N};

  std::vector<int> m(static_cast<std::size_t>(x.dim()), 0);
  m[0] = N;
  do {
    ctx.process(m, out.zeros, out.uncovered);
  } while (next_composition(m));
  return out;
}

template <typename S>
GridCoverReport grid_cover_parallel(const SymMatrix<S>& x, const std::vector<SupportSet>& pstars, int N,
                                    GridLimits lim = {}) {
  GridCoverReport out;
  detail::check_grid(x.dim(), N, lim, out.points);
  detail::CoverCtx<S> ctx{x, pstars, x.zero_scale(), N};

  const int chunks = N + 1;
  std::vector<std::size_t> zeros(static_cast<std::size_t>(chunks), 0);
  std::vector<std::vector<std::vector<int>>> uncovered(static_cast<std::size_t>(chunks));

#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < chunks; ++c) {
    const int first = N - c;
    if (x.dim() == 1 && first != N) continue;
    detail::scan_chunk_serial(x, first, N - first, [&](const std::vector<int>& m) {
      ctx.process(m, zeros[static_cast<std::size_t>(c)], uncovered[static_cast<std::size_t>(c)]);
    });
  }

  for (int c = 0; c < chunks; ++c) {
    out.zeros += zeros[static_cast<std::size_t>(c)];
    for (auto& m : uncovered[static_cast<std::size_t>(c)]) out.uncovered.push_back(std::move(m));
  }
  return out;
}

template <typename S>
GridCoverReport grid_cover(const SymMatrix<S>& x, const std::vector<SupportSet>& pstars, int N,
                           GridLimits lim = {}, Exec exec = Exec::parallel) {
  return exec == Exec::serial ? grid_cover_serial(x, pstars, N, lim) : grid_cover_parallel(x, pstars, N, lim);
}

}  // namespace copzero

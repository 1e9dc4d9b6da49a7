#include <algorithm>
#include <random>
#include <stdexcept>

#include "copzero/graphgen.hpp"
#include "copzero/zerograph.hpp"

namespace copzero {

PlainGraph PlainGraph::make(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  for (auto& [i, j] : edges) {
    if (i == j) throw std::invalid_argument("self-loop in edge list");
    if (i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("edge endpoint out of range");
    if (i > j) std::swap(i, j);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return {n, std::move(edges)};
}

SymMatrix<Rational> matrix_from_graph(const PlainGraph& g) {
  SymMatrix<Rational> y(g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j) y.set(i, j, Rational(1));
  for (auto [i, j] : g.edges) y.set(i, j, Rational(0));
  return y;
}

bool round_trip(const PlainGraph& g, Exec exec) {
  const SymMatrix<Rational> y = matrix_from_graph(g);
  const MinimalZeroSet<Rational> zs = enumerate_minimal_zeros(y, exec);

  if (static_cast<int>(zs.zeros.size()) != g.n) return false;
  for (int i = 0; i < g.n; ++i) {
    const auto& z = zs.zeros[static_cast<std::size_t>(i)];
    if (z.support != SupportSet::of({i})) return false;
    for (int k = 0; k < g.n; ++k)
      if (!(z.tau[static_cast<std::size_t>(k)] == Rational(k == i ? 1 : 0))) return false;
  }

  const ZerosGraph gy = build_graph(extended_support_set(y, zs.zeros));
  return gy.vertex_count == g.n && gy.edges == g.edges;
}

PlainGraph random_graph(int n, double edge_prob, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < edge_prob) edges.emplace_back(i, j);
  return PlainGraph::make(n, std::move(edges));
}

}  // namespace copzero

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "copzero/matrix.hpp"

namespace copzero {

/// Undirected graph on vertices 0..n-1.
struct PlainGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // normalized to i < j, sorted, unique

  static PlainGraph make(int n, std::vector<std::pair<int, int>> edges);
};

/// Matrix Y realizing g as its minimal zeros graph: zero diagonal, Y_ij = 0
/// on edges and 1 otherwise. Entries are nonnegative, so Y is copositive.
SymMatrix<Rational> matrix_from_graph(const PlainGraph& g);

/// Runs the full pipeline on matrix_from_graph(g) and checks that the minimal
/// zeros are exactly the basis vectors and that G(Y) equals g.
bool round_trip(const PlainGraph& g, Exec exec = Exec::parallel);

/// Erdos-Renyi style sample with a fixed seed, for reproducible corpora.
PlainGraph random_graph(int n, double edge_prob, std::uint64_t seed);

}  // namespace copzero

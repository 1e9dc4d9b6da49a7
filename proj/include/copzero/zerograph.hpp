#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "copzero/matrix.hpp"
#include "copzero/minimal_zeros.hpp"
#include "copzero/support_set.hpp"

namespace copzero {

/// One entry of the extended minimal zeros support set E:
/// the pair (supp(tau(j)), M(j)).
struct ExtendedSupportPair {
  int j = -1;
  SupportSet supp;
  SupportSet M;
};

/// M(j) = { k : (X tau(j))_k = 0 }, per the mode's zero test.
template <typename S>
SupportSet compute_M(const SymMatrix<S>& x, const std::vector<S>& tau) {
  const std::vector<S> xt = mat_vec(x, tau);
  const double scale = x.zero_scale();
  SupportSet m;
  for (int k = 0; k < x.dim(); ++k)
    if (scalar_is_zero(xt[static_cast<std::size_t>(k)], x.tol(), scale)) m.add(k);
  return m;
}

template <typename S>
std::vector<ExtendedSupportPair> extended_support_set(const SymMatrix<S>& x,
                                                      const std::vector<MinimalZero<S>>& zeros) {
  std::vector<ExtendedSupportPair> e;
  e.reserve(zeros.size());
  for (const auto& z : zeros) e.push_back({z.j, z.support, compute_M(x, z.tau)});
  return e;
}

/// Minimal zeros graph G(X): vertices 0..n-1, undirected edges stored as
/// ordered pairs (i < j).
struct ZerosGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // sorted

  bool has_edge(int i, int j) const;
  std::vector<SupportSet> adjacency() const;  // neighbor masks per vertex

  friend bool operator==(const ZerosGraph&, const ZerosGraph&) = default;
};

/// Edge (i,j), i<j, iff supp(tau(i)) ⊆ M(j).
ZerosGraph build_graph(const std::vector<ExtendedSupportPair>& e);

/// Edge (i,j), i<j, iff tau(i)^T X tau(j) = 0; cross-check of build_graph.
template <typename S>
ZerosGraph build_graph_quadratic(const SymMatrix<S>& x, const std::vector<MinimalZero<S>>& zeros) {
  ZerosGraph g;
  g.vertex_count = static_cast<int>(zeros.size());
  const double scale = x.zero_scale();
  for (std::size_t i = 0; i < zeros.size(); ++i)
    for (std::size_t j = i + 1; j < zeros.size(); ++j) {
      S acc{};
      for (int k : zeros[i].support.indices())
        for (int q : zeros[j].support.indices()) acc += zeros[i].tau[static_cast<std::size_t>(k)] * x.at(k, q) * zeros[j].tau[static_cast<std::size_t>(q)];
      if (scalar_is_zero(acc, x.tol(), scale))
        g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return g;
}

/// Vertex subsets standing for cliques of G (members as a bit mask).
using VertexSet = SupportSet;

/// All maximal cliques, via Bron-Kerbosch with pivoting over a degeneracy
/// ordering. Output sorted by (size descending, member list ascending).
std::vector<VertexSet> maximal_cliques(const ZerosGraph& g);

struct RepresentationComponent {
  int s = -1;                 // 0-based component index
  VertexSet members;          // J(s), a maximal clique
  SupportSet p_star;          // union of member supports
};

/// T0 = union over components of conv{tau(j), j in J(s)}.
struct Representation {
  std::vector<RepresentationComponent> components;
  std::vector<std::string> issues;  // violated invariants, empty when valid
};

Representation build_representation(const std::vector<ExtendedSupportPair>& e,
                                    const std::vector<VertexSet>& cliques);

/// The three conditions characterizing the maximal-clique family.
struct CliqueFamilyReport {
  bool cover = false;          // every j lies in some J(s)
  bool pstar_inside_m = false; // P*(s) ⊆ M(j) for every j in J(s)
  bool separation = false;     // pairwise separation via some supp ⊄ M
  struct Counterexample {
    int s, s_bar, i0;
  };
  std::optional<Counterexample> counterexample;  // for a failed c)

  bool all() const { return cover && pstar_inside_m && separation; }
};

CliqueFamilyReport verify_clique_family(const std::vector<ExtendedSupportPair>& e, const std::vector<VertexSet>& cliques);

/// No P*(s) may contain another (vacuous for fewer than two components).
bool verify_pstar_incomparability(const Representation& rep);

}  // namespace copzero

#include <algorithm>

#include "copzero/zerograph.hpp"

namespace copzero {

bool ZerosGraph::has_edge(int i, int j) const {
  if (i == j) return false;
  if (i > j) std::swap(i, j);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

std::vector<SupportSet> ZerosGraph::adjacency() const {
  std::vector<SupportSet> adj(static_cast<std::size_t>(vertex_count));
  for (auto [i, j] : edges) {
    adj[static_cast<std::size_t>(i)].add(j);
    adj[static_cast<std::size_t>(j)].add(i);
  }
  return adj;
}

ZerosGraph build_graph(const std::vector<ExtendedSupportPair>& e) {
  ZerosGraph g;
  g.vertex_count = static_cast<int>(e.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (e[i].supp.subset_of(e[j].M)) g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

namespace {

void bron_kerbosch(VertexSet r, VertexSet p, VertexSet x, const std::vector<SupportSet>& adj,
                   std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  // pivot: vertex of P ∪ X with the most neighbors in P
  int pivot = -1, best = -1;
  for (int u : p.set_union(x).indices()) {
    const int deg = p.intersect(adj[static_cast<std::size_t>(u)]).size();
    if (deg > best) {
      best = deg;
      pivot = u;
    }
  }
  for (int v : p.minus(adj[static_cast<std::size_t>(pivot)]).indices()) {
    const SupportSet& nv = adj[static_cast<std::size_t>(v)];
    VertexSet rv = r;
    rv.add(v);
    bron_kerbosch(rv, p.intersect(nv), x.intersect(nv), adj, out);
    p.remove(v);
    x.add(v);
  }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const ZerosGraph& g) {
  const int n = g.vertex_count;
  std::vector<VertexSet> out;
  if (n == 0) return out;
  const std::vector<SupportSet> adj = g.adjacency();

  // degeneracy ordering: repeatedly remove a vertex of minimum degree
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  SupportSet alive = SupportSet::full(n);
  while (!alive.empty()) {
    int pick = -1, deg = n + 1;
    for (int v : alive.indices()) {
      const int d = adj[static_cast<std::size_t>(v)].intersect(alive).size();
      if (d < deg) {
        deg = d;
        pick = v;
      }
    }
    order.push_back(pick);
    alive.remove(pick);
  }

  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

  for (int v : order) {
    const SupportSet& nv = adj[static_cast<std::size_t>(v)];
    VertexSet p, x;
    for (int u : nv.indices()) {
      if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)])
        p.add(u);
      else
        x.add(u);
    }
    bron_kerbosch(VertexSet::of({v}), p, x, adj, out);
  }

  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.indices() < b.indices();
  });
  return out;
}

Representation build_representation(const std::vector<ExtendedSupportPair>& e,
                                    const std::vector<VertexSet>& cliques) {
  Representation rep;
  for (std::size_t s = 0; s < cliques.size(); ++s) {
    RepresentationComponent comp;
    comp.s = static_cast<int>(s);
    comp.members = cliques[s];
    for (int j : cliques[s].indices()) {
      if (j >= static_cast<int>(e.size())) {
        rep.issues.push_back("clique member out of range");
        continue;
      }
      comp.p_star = comp.p_star.set_union(e[static_cast<std::size_t>(j)].supp);
    }
    if (comp.members.empty()) rep.issues.push_back("empty component");
    rep.components.push_back(comp);
  }

  for (std::size_t a = 0; a < rep.components.size(); ++a)
    for (std::size_t b = 0; b < rep.components.size(); ++b)
      if (a != b && rep.components[a].members == rep.components[b].members) {
        rep.issues.push_back("duplicate component " + rep.components[a].members.str());
        break;
      }
  if (!verify_pstar_incomparability(rep))
    rep.issues.push_back("P* sets are not incomparable");
  return rep;
}

CliqueFamilyReport verify_clique_family(const std::vector<ExtendedSupportPair>& e, const std::vector<VertexSet>& cliques) {
  CliqueFamilyReport rep;

  // coverage of J
  VertexSet covered;
  for (const VertexSet& c : cliques) covered = covered.set_union(c);
  rep.cover = covered == SupportSet::full(static_cast<int>(e.size()));

  // P*(s) ⊆ M(j) for all j in J(s)
  rep.pstar_inside_m = true;
  std::vector<SupportSet> pstars;
  for (const VertexSet& c : cliques) {
    SupportSet ps;
    for (int j : c.indices()) ps = ps.set_union(e[static_cast<std::size_t>(j)].supp);
    pstars.push_back(ps);
    for (int j : c.indices())
      if (!ps.subset_of(e[static_cast<std::size_t>(j)].M)) rep.pstar_inside_m = false;
  }

  // for distinct s, s̄: the set differences are nonempty and every
  // i0 in J(s)\J(s̄) has some j0 in J(s̄)\J(s) with supp(tau(i0)) ⊄ M(j0)
  rep.separation = true;
  for (std::size_t s = 0; s < cliques.size() && rep.separation; ++s)
    for (std::size_t sb = 0; sb < cliques.size() && rep.separation; ++sb) {
      if (s == sb) continue;
      const VertexSet only_s = cliques[s].minus(cliques[sb]);
      const VertexSet only_sb = cliques[sb].minus(cliques[s]);
      if (only_s.empty() || only_sb.empty()) {
        rep.separation = false;
        rep.counterexample = {static_cast<int>(s), static_cast<int>(sb), -1};
        break;
      }
      for (int i0 : only_s.indices()) {
        bool found = false;
        for (int j0 : only_sb.indices())
          if (!e[static_cast<std::size_t>(i0)].supp.subset_of(e[static_cast<std::size_t>(j0)].M)) {
            found = true;
            break;
          }
        if (!found) {
          rep.separation = false;
          rep.counterexample = {static_cast<int>(s), static_cast<int>(sb), i0};
          break;
        }
      }
    }
  return rep;
}

bool verify_pstar_incomparability(const Representation& rep) {
  const auto& cs = rep.components;
  for (std::size_t a = 0; a < cs.size(); ++a)
    for (std::size_t b = 0; b < cs.size(); ++b)
      if (a != b && cs[a].p_star.subset_of(cs[b].p_star)) return false;
  return true;
}

}  // namespace copzero

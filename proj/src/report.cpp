#include <sstream>

#include "copzero/report.hpp"

namespace copzero {

namespace {

using Json = nlohmann::json;

Json scalar_json(const Rational& x) { return x.str(); }
Json scalar_json(double x) { return x; }

Json indices_1based(SupportSet s) {
  Json out = Json::array();
  for (int i : s.indices()) out.push_back(i + 1);
  return out;
}

template <typename S>
Json vector_json(const std::vector<S>& v) {
  Json out = Json::array();
  for (const S& x : v) out.push_back(scalar_json(x));
  return out;
}

Json edges_json(const ZerosGraph& g) {
  Json out = Json::array();
  for (auto [i, j] : g.edges) out.push_back(Json::array({i + 1, j + 1}));
  return out;
}

template <typename S>
std::string vector_text(const std::vector<S>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += scalar_str(v[i]);
  }
  return out + ")";
}

}  // namespace

template <typename S>
Json report_json(const PipelineResult<S>& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;

  Json input;
  input["p"] = r.input.dim();
  input["mode"] = mode_name(mode_of<S>);
  Json rows = Json::array();
  for (int k = 0; k < r.input.dim(); ++k) {
    Json row = Json::array();
    for (int q = 0; q < r.input.dim(); ++q) row.push_back(scalar_json(r.input.at(k, q)));
    rows.push_back(std::move(row));
  }
  input["rows"] = std::move(rows);
  input["tolerances"] = {{"rank_eps", r.input.tol().rank_eps},
                         {"zero_eps", r.input.tol().zero_eps},
                         {"positivity_eps", r.input.tol().positivity_eps}};
  if (mode_of<S> == Mode::floating) input["float_zero_scale"] = r.input.zero_scale();
  j["input"] = std::move(input);

  Json cop;
  cop["checked"] = r.verdict.has_value();
  if (r.verdict) {
    cop["is_copositive"] = r.verdict->is_copositive;
    cop["method"] = method_name(r.verdict->method);
    cop["witness"] = r.verdict->witness ? vector_json(*r.verdict->witness) : Json{};
  } else {
    cop["note"] = "input not verified copositive";
  }
  j["copositivity"] = std::move(cop);

  Json zeros = Json::array();
  for (std::size_t i = 0; i < r.zeros.zeros.size(); ++i) {
    const auto& z = r.zeros.zeros[i];
    Json zj;
    zj["j"] = z.j + 1;
    zj["tau"] = vector_json(z.tau);
    zj["support"] = indices_1based(z.support);
    zj["M"] = indices_1based(r.e[i].M);
    zeros.push_back(std::move(zj));
  }
  j["minimal_zeros"] = std::move(zeros);

  j["graph"] = {{"vertices", r.graph.vertex_count}, {"edges", edges_json(r.graph)}};
  j["edge_definitions_agree"] = r.edge_definitions_agree;

  Json cliques = Json::array();
  for (const VertexSet& c : r.cliques) cliques.push_back(indices_1based(c));
  j["cliques"] = std::move(cliques);

  Json rep;
  Json comps = Json::array();
  for (const auto& c : r.rep.components)
    comps.push_back({{"s", c.s + 1}, {"J", indices_1based(c.members)}, {"P_star", indices_1based(c.p_star)}});
  rep["components"] = std::move(comps);
  rep["issues"] = r.rep.issues;
  j["representation"] = std::move(rep);

  Json ver;
  ver["clique_cover"] = r.clique_family.cover;
  ver["pstar_inside_m"] = r.clique_family.pstar_inside_m;
  ver["clique_separation"] = r.clique_family.separation;
  ver["supports_incomparable"] = r.supports_incomparable;
  ver["pstars_incomparable"] = r.pstars_incomparable;
  if (r.oracle) {
    Json o;
    o["points"] = r.oracle->points;
    o["zeros_found"] = r.oracle->zeros_found;
    Json viols = Json::array();
    for (const auto& m : r.oracle->violations) viols.push_back(m);
    o["violations"] = std::move(viols);
    ver["oracle"] = std::move(o);
  } else {
    ver["oracle"] = Json{};
  }
  j["verification"] = std::move(ver);

  j["warnings"] = r.zeros.warnings;
  return j;
}

template <typename S>
std::string report_text(const PipelineResult<S>& r) {
  std::ostringstream os;
  os << "p: " << r.input.dim() << "  mode: " << mode_name(mode_of<S>) << "\n";
  const auto& tol = r.input.tol();
  os << "tolerances: rank_eps=" << tol.rank_eps << " zero_eps=" << tol.zero_eps
     << " positivity_eps=" << tol.positivity_eps << "\n";

  if (r.verdict) {
    os << "copositive: " << (r.verdict->is_copositive ? "yes" : "NO") << " (" << method_name(r.verdict->method)
       << ")\n";
    if (r.verdict->witness) os << "  witness t = " << vector_text(*r.verdict->witness) << "\n";
  } else {
    os << "copositive: not verified (results assume it)\n";
  }

  os << "minimal zeros: " << r.zeros.zeros.size() << "\n";
  for (std::size_t i = 0; i < r.zeros.zeros.size(); ++i) {
    const auto& z = r.zeros.zeros[i];
    os << "  tau(" << z.j + 1 << ") = " << vector_text(z.tau) << "  supp " << z.support.str() << "  M "
       << r.e[i].M.str() << "\n";
  }

  os << "graph: " << r.graph.vertex_count << " vertices, edges {";
  for (std::size_t i = 0; i < r.graph.edges.size(); ++i) {
    if (i) os << ", ";
    os << "(" << r.graph.edges[i].first + 1 << "," << r.graph.edges[i].second + 1 << ")";
  }
  os << "}\n";

  os << "maximal cliques:";
  for (const VertexSet& c : r.cliques) os << " " << c.str();
  os << "\n";

  os << "representation: " << r.rep.components.size() << " component(s)\n";
  for (const auto& c : r.rep.components)
    os << "  s=" << c.s + 1 << "  J=" << c.members.str() << "  P*=" << c.p_star.str() << "\n";
  for (const auto& issue : r.rep.issues) os << "  issue: " << issue << "\n";

  os << "checks: clique cover/inclusion/separation " << (r.clique_family.cover ? "ok" : "FAIL") << "/"
     << (r.clique_family.pstar_inside_m ? "ok" : "FAIL") << "/"
     << (r.clique_family.separation ? "ok" : "FAIL") << ", supports incomparable "
     << (r.supports_incomparable ? "ok" : "FAIL") << ", P* incomparable "
     << (r.pstars_incomparable ? "ok" : "FAIL") << ", edge definitions "
     << (r.edge_definitions_agree ? "agree" : "DISAGREE") << "\n";

  if (r.oracle) {
    os << "grid oracle: " << r.oracle->points << " points, " << r.oracle->zeros_found << " zeros, "
       << r.oracle->violations.size() << " violation(s)\n";
    for (const auto& m : r.oracle->violations) {
      os << "  uncovered zero at m = (";
      for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
      os << ")\n";
    }
  }
  for (const auto& w : r.zeros.warnings) os << "warning: " << w << "\n";
  return os.str();
}

template Json report_json(const PipelineResult<Rational>&);
template Json report_json(const PipelineResult<double>&);
template std::string report_text(const PipelineResult<Rational>&);
template std::string report_text(const PipelineResult<double>&);

std::string graph_dot(const ZerosGraph& g, const std::vector<ExtendedSupportPair>& e) {
  std::ostringstream os;
  os << "graph minimal_zeros {\n";
  for (int v = 0; v < g.vertex_count; ++v) {
    os << "  n" << v + 1 << " [label=\"" << v + 1 << ":"
       << (v < static_cast<int>(e.size()) ? e[static_cast<std::size_t>(v)].supp.str() : std::string("{}"))
       << "\"];\n";
  }
  for (auto [i, j] : g.edges) os << "  n" << i + 1 << " -- n" << j + 1 << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace copzero

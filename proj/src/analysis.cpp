#include "copzero/analysis.hpp"

namespace copzero {

template <typename S>
PipelineResult<S> run_pipeline(const SymMatrix<S>& x, const AnalysisOptions& opt) {
  PipelineResult<S> r;
  r.input = x;

  if (opt.gate) r.verdict = check_copositive(x, opt.cop_limits);

  r.zeros = enumerate_minimal_zeros(x, opt.exec);
  r.e = extended_support_set(x, r.zeros.zeros);
  r.graph = build_graph(r.e);
  r.graph_quadratic = build_graph_quadratic(x, r.zeros.zeros);
  r.edge_definitions_agree = r.graph == r.graph_quadratic;
  r.cliques = maximal_cliques(r.graph);
  r.rep = build_representation(r.e, r.cliques);
  r.clique_family = verify_clique_family(r.e, r.cliques);

  std::vector<SupportSet> supports;
  for (const auto& z : r.zeros.zeros) supports.push_back(z.support);
  r.supports_incomparable = verify_support_incomparability(supports);
  r.pstars_incomparable = verify_pstar_incomparability(r.rep);

  if (opt.run_oracle) r.oracle = oracle_equivalence(x, r.rep, opt.grid_n, opt.grid_limits, opt.exec);
  return r;
}

template PipelineResult<Rational> run_pipeline(const SymMatrix<Rational>&, const AnalysisOptions&);
template PipelineResult<double> run_pipeline(const SymMatrix<double>&, const AnalysisOptions&);

}  // namespace copzero

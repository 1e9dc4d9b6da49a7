#pragma once

#include <optional>

#include "copzero/copositivity.hpp"
#include "copzero/minimal_zeros.hpp"
#include "copzero/zerograph.hpp"
#include "copzero/zeroset.hpp"

namespace copzero {

struct AnalysisOptions {
  bool gate = true;  // verify copositivity before anything else
  CopositivityLimits cop_limits;
  bool run_oracle = false;  // exhaustive grid validation of the representation
  int grid_n = 6;
  GridLimits grid_limits;
  Exec exec = Exec::parallel;
};

template <typename S>
struct PipelineResult {
  SymMatrix<S> input;
  std::optional<CopositivityVerdict<S>> verdict;  // absent when the gate was skipped
  MinimalZeroSet<S> zeros;
  std::vector<ExtendedSupportPair> e;
  ZerosGraph graph;            // via supp(tau(i)) ⊆ M(j)
  ZerosGraph graph_quadratic;  // via tau(i)^T X tau(j) = 0
  bool edge_definitions_agree = true;
  std::vector<VertexSet> cliques;
  Representation rep;
  CliqueFamilyReport clique_family;
  bool supports_incomparable = true;
  bool pstars_incomparable = true;
  std::optional<OracleReport> oracle;

  bool copositive_or_unchecked() const { return !verdict || verdict->is_copositive; }
};

template <typename S>
PipelineResult<S> run_pipeline(const SymMatrix<S>& x, const AnalysisOptions& opt = {});

extern template PipelineResult<Rational> run_pipeline(const SymMatrix<Rational>&, const AnalysisOptions&);
extern template PipelineResult<double> run_pipeline(const SymMatrix<double>&, const AnalysisOptions&);

}  // namespace copzero

#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "copzero/analysis.hpp"

namespace copzero {

inline constexpr int kSchemaVersion = 1;

// All indices in rendered output are 1-based; exact scalars render as
// "num/den" strings, floats as JSON numbers.
template <typename S>
nlohmann::json report_json(const PipelineResult<S>& r);

template <typename S>
std::string report_text(const PipelineResult<S>& r);

extern template nlohmann::json report_json(const PipelineResult<Rational>&);
extern template nlohmann::json report_json(const PipelineResult<double>&);
extern template std::string report_text(const PipelineResult<Rational>&);
extern template std::string report_text(const PipelineResult<double>&);

/// Graphviz rendering: vertices labeled "j:support", undirected edges.
std::string graph_dot(const ZerosGraph& g, const std::vector<ExtendedSupportPair>& e);

}  // namespace copzero

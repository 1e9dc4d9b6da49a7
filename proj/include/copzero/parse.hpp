#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "copzero/graphgen.hpp"
#include "copzero/matrix.hpp"

namespace copzero {

/// Mode-dispatched parse results. Exact mode when every entry is an integer,
/// fraction "a/b", or finite decimal; float mode otherwise or on request.
using AnyMatrix = std::variant<SymMatrix<Rational>, SymMatrix<double>>;
using AnyVector = std::variant<std::vector<Rational>, std::vector<double>>;

inline Mode mode_of_matrix(const AnyMatrix& m) {
  return std::holds_alternative<SymMatrix<Rational>>(m) ? Mode::exact : Mode::floating;
}

// Text form: p whitespace-separated rows of p entries, one row per line.
// JSON form: {"p": int, "rows": [[...]]} with numbers or "a/b" strings.
AnyMatrix parse_matrix(std::string_view text, std::optional<Mode> forced, Tolerances tol);

// One simplex point: p entries, any whitespace layout.
AnyVector parse_point(std::string_view text, Mode mode);

// Edge list: first line "n <count>", then one 1-based "i j" pair per line.
PlainGraph parse_edge_list(std::string_view text);

std::string matrix_to_text(const SymMatrix<Rational>& m);

}  // namespace copzero

#include <charconv>
#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "copzero/parse.hpp"

namespace copzero {

namespace {

using Json = nlohmann::json;

std::vector<std::vector<std::string>> tokenize_rows(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    const std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    std::istringstream is{std::string(line)};
    std::vector<std::string> toks;
    for (std::string t; is >> t;) toks.push_back(std::move(t));
    if (!toks.empty()) rows.push_back(std::move(toks));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return rows;
}

std::optional<double> parse_double(const std::string& tok) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end != begin + tok.size()) return std::nullopt;
  if (!std::isfinite(v)) return std::nullopt;
  return v;
}

std::vector<std::vector<std::string>> json_rows(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("p") || !j.contains("rows"))
    throw ParseError("JSON matrix must be an object with \"p\" and \"rows\"");
  const int p = j.at("p").get<int>();
  const Json& rows = j.at("rows");
  if (!rows.is_array() || static_cast<int>(rows.size()) != p)
    throw ParseError("JSON \"rows\" must hold p rows");
  std::vector<std::vector<std::string>> out;
  for (const Json& row : rows) {
    if (!row.is_array()) throw ParseError("JSON row is not an array");
    std::vector<std::string> toks;
    for (const Json& v : row) {
      if (v.is_string())
        toks.push_back(v.get<std::string>());
      else if (v.is_number())
        toks.push_back(v.dump());  // shortest round-trip literal
      else
        throw ParseError("JSON matrix entries must be numbers or strings");
    }
    out.push_back(std::move(toks));
  }
  return out;
}

struct TokenGrid {
  std::vector<std::vector<std::string>> rows;
  bool all_rational = true;
};

TokenGrid load_grid(std::string_view text) {
  TokenGrid g;
  const auto first_nonspace = text.find_first_not_of(" \t\r\n");
  if (first_nonspace == std::string_view::npos) throw ParseError("empty matrix input");
  g.rows = text[first_nonspace] == '{' ? json_rows(text) : tokenize_rows(text);

  const int p = static_cast<int>(g.rows.size());
  for (int r = 0; r < p; ++r) {
    if (static_cast<int>(g.rows[static_cast<std::size_t>(r)].size()) != p)
      throw ParseError("row " + std::to_string(r + 1) + " has " +
                           std::to_string(g.rows[static_cast<std::size_t>(r)].size()) + " entries, expected " +
                           std::to_string(p),
                       r + 1);
    for (int c = 0; c < p; ++c) {
      const std::string& tok = g.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (!Rational::parse(tok)) {
        g.all_rational = false;
        if (!parse_double(tok))
          throw ParseError("unparseable entry '" + tok + "' at row " + std::to_string(r + 1) + ", column " +
                               std::to_string(c + 1),
                           r + 1, c + 1);
      }
    }
  }
  return g;
}

}  // namespace

AnyMatrix parse_matrix(std::string_view text, std::optional<Mode> forced, Tolerances tol) {
  tol.validate();
  const TokenGrid g = load_grid(text);
  const Mode mode = forced.value_or(g.all_rational ? Mode::exact : Mode::floating);
  if (mode == Mode::exact && !g.all_rational)
    throw ParseError("exact mode requested but input has non-rational entries");

  const int p = static_cast<int>(g.rows.size());
  try {
    if (mode == Mode::exact) {
      std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(p));
      for (int r = 0; r < p; ++r)
        for (const std::string& tok : g.rows[static_cast<std::size_t>(r)])
          rows[static_cast<std::size_t>(r)].push_back(*Rational::parse(tok));
      return SymMatrix<Rational>::from_rows(rows, tol);
    }
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(p));
    for (int r = 0; r < p; ++r)
      for (const std::string& tok : g.rows[static_cast<std::size_t>(r)]) {
        const auto rat = Rational::parse(tok);
        rows[static_cast<std::size_t>(r)].push_back(rat ? rat->to_double() : *parse_double(tok));
      }
    return SymMatrix<double>::from_rows(rows, tol);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

AnyVector parse_point(std::string_view text, Mode mode) {
  std::istringstream is{std::string(text)};
  std::vector<std::string> toks;
  for (std::string t; is >> t;) toks.push_back(std::move(t));
  if (toks.empty()) throw ParseError("empty point input");

  if (mode == Mode::exact) {
    std::vector<Rational> out;
    for (const auto& tok : toks) {
      const auto r = Rational::parse(tok);
      if (!r) throw ParseError("non-rational point entry '" + tok + "'");
      out.push_back(*r);
    }
    return out;
  }
  std::vector<double> out;
  for (const auto& tok : toks) {
    if (const auto r = Rational::parse(tok)) {
      out.push_back(r->to_double());
      continue;
    }
    const auto d = parse_double(tok);
    if (!d) throw ParseError("unparseable point entry '" + tok + "'");
    out.push_back(*d);
  }
  return out;
}

PlainGraph parse_edge_list(std::string_view text) {
  const auto rows = tokenize_rows(text);
  if (rows.empty()) throw ParseError("empty edge list");
  const auto& head = rows[0];
  if (head.size() != 2 || head[0] != "n")
    throw ParseError("edge list must start with a line 'n <vertex-count>'", 1);
  int n = 0;
  if (std::from_chars(head[1].data(), head[1].data() + head[1].size(), n).ec != std::errc{} || n < 1)
    throw ParseError("invalid vertex count '" + head[1] + "'", 1);

  std::vector<std::pair<int, int>> edges;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != 2) throw ParseError("edge line must hold two vertex ids", static_cast<int>(r + 1));
    int a = 0, b = 0;
    if (std::from_chars(rows[r][0].data(), rows[r][0].data() + rows[r][0].size(), a).ec != std::errc{} ||
        std::from_chars(rows[r][1].data(), rows[r][1].data() + rows[r][1].size(), b).ec != std::errc{})
      throw ParseError("invalid edge line", static_cast<int>(r + 1));
    if (a < 1 || b < 1 || a > n || b > n || a == b)
      throw ParseError("edge endpoints out of range", static_cast<int>(r + 1));
    edges.emplace_back(a - 1, b - 1);
  }
  return PlainGraph::make(n, std::move(edges));
}

std::string matrix_to_text(const SymMatrix<Rational>& m) {
  std::string out;
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = 0; c < m.dim(); ++c) {
      if (c) out += ' ';
      out += m.at(r, c).str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace copzero

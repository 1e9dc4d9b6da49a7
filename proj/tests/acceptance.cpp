// Acceptance suite: runs every gate criterion end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "copzero/analysis.hpp"
#include "copzero/fixtures.hpp"
#include "copzero/graphgen.hpp"
#include "copzero/parse.hpp"
#include "copzero/report.hpp"
#include "oracles.hpp"

using namespace copzero;
using copzero::testing::brute_force_maximal_cliques;
using copzero::testing::brute_force_minimal_zeros;
using Json = nlohmann::json;

namespace {

int failures = 0;

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;  // 0 = untimed
};

void report(const Criterion& c, bool ok, double elapsed, const std::string& detail = {}) {
  if (!ok) ++failures;
  std::printf("%s  criterion %2d: %s", ok ? "PASS" : "FAIL", c.id, c.name.c_str());
  if (c.budget_seconds > 0) std::printf("  [%.2fs / %.0fs]", elapsed, c.budget_seconds);
  if (!detail.empty()) std::printf("  -- %s", detail.c_str());
  std::printf("\n");
}

void run(const Criterion& c, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (ok && c.budget_seconds > 0 && elapsed > c.budget_seconds) {
    ok = false;
    detail = "time budget exceeded";
  }
  report(c, ok, elapsed, detail);
}

std::string cli_json(const std::string& args) {
  const std::string cmd = std::string(COPZERO_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  pclose(pipe);
  return out;
}

SymMatrix<Rational> fixture_exact(const std::string& name) {
  return std::get<SymMatrix<Rational>>(parse_matrix(fixture_text(name), std::nullopt, {}));
}

PipelineResult<Rational> analyzed(const std::string& name) {
  AnalysisOptions opt;
  opt.gate = false;
  return run_pipeline(fixture_exact(name), opt);
}

bool expect(bool cond, const std::string& what, std::string& detail) {
  if (!cond && detail.empty()) detail = what;
  return cond;
}

const Json kEdges12_34 = Json::parse("[[1,2],[3,4]]");

bool criterion1(std::string& detail) {
  const Json j = Json::parse(cli_json("analyze --fixture example-x --json"));
  bool ok = true;
  const Json& zs = j.at("minimal_zeros");
  ok &= expect(zs.size() == 4, "expected 4 minimal zeros", detail);
  for (int i = 0; i < 4 && ok; ++i) {
    Json tau = Json::array();
    for (int k = 0; k < 5; ++k) tau.push_back(k == i ? "1" : "0");
    ok &= expect(zs.at(i).at("tau") == tau, "zero " + std::to_string(i + 1) + " is not e_i", detail);
  }
  ok &= expect(zs.at(0).at("M") == Json::parse("[1,2]") && zs.at(1).at("M") == Json::parse("[1,2]"),
               "M(1)=M(2)={1,2} violated", detail);
  ok &= expect(zs.at(2).at("M") == Json::parse("[3,4]") && zs.at(3).at("M") == Json::parse("[3,4]"),
               "M(3)=M(4)={3,4} violated", detail);
  ok &= expect(j.at("graph").at("edges") == kEdges12_34, "edges != {(1,2),(3,4)}", detail);
  ok &= expect(j.at("cliques") == Json::parse("[[1,2],[3,4]]"), "cliques mismatch", detail);
  ok &= expect(j.at("representation").at("components").at(0).at("P_star") == Json::parse("[1,2]") &&
                   j.at("representation").at("components").at(1).at("P_star") == Json::parse("[3,4]"),
               "P* mismatch", detail);
  return ok;
}

bool criterion2(std::string& detail) {
  const Json j = Json::parse(cli_json("analyze --fixture example-xbar --json"));
  bool ok = true;
  const Json& zs = j.at("minimal_zeros");
  ok &= expect(zs.size() == 4, "expected 4 minimal zeros", detail);

  std::set<Json> got, want;
  for (const auto& z : zs) got.insert(z.at("tau"));
  want.insert(Json::parse(R"(["1/2","1/2","0","0","0"])"));
  want.insert(Json::parse(R"(["0","1/2","1/2","0","0"])"));
  want.insert(Json::parse(R"(["0","0","0","1/2","1/2"])"));
  want.insert(Json::parse(R"(["1/2","0","0","0","1/2"])"));
  ok &= expect(got == want, "zero set differs from the expected four vectors", detail);

  std::set<Json> supports;
  for (const auto& z : zs) supports.insert(z.at("support"));
  ok &= expect(supports == std::set<Json>{Json::parse("[1,2]"), Json::parse("[2,3]"), Json::parse("[4,5]"),
                                          Json::parse("[1,5]")},
               "support family mismatch", detail);

  ok &= expect(zs.at(0).at("M") == Json::parse("[1,2,3]") && zs.at(1).at("M") == Json::parse("[1,2,3]"),
               "M(1)=M(2)={1,2,3} violated", detail);
  ok &= expect(zs.at(2).at("M") == Json::parse("[1,4,5]") && zs.at(3).at("M") == Json::parse("[1,4,5]"),
               "M(3)=M(4)={1,4,5} violated", detail);
  ok &= expect(j.at("graph").at("edges") == kEdges12_34, "graph differs from criterion 1's", detail);
  return ok;
}

bool criterion3(std::string& detail) {
  const auto rx = analyzed("example-x");
  const auto rxbar = analyzed("example-xbar");
  return expect(rx.graph == rxbar.graph, "G(X) != G(Xbar)", detail) &&
         expect(rx.graph.vertex_count == 4, "vertex set mismatch", detail);
}

bool criterion4(std::string& detail) {
  for (const auto& name : fixture_names()) {
    const auto r = analyzed(name);
    if (!expect(r.graph == r.graph_quadratic, "edge definitions disagree on " + name, detail)) return false;
  }
  int produced = 0;
  for (std::uint64_t seed = 1; produced < 50; ++seed) {
    const int n = 3 + static_cast<int>(seed % 6);  // 3..8
    const double prob = (seed % 3 == 0) ? 0.2 : (seed % 3 == 1) ? 0.5 : 0.8;
    const auto y = matrix_from_graph(random_graph(n, prob, 31000 + seed));
    const auto zs = enumerate_minimal_zeros(y);
    const auto e = extended_support_set(y, zs.zeros);
    if (!expect(build_graph(e) == build_graph_quadratic(y, zs.zeros),
                "edge definitions disagree on a random realization", detail))
      return false;
    ++produced;
  }
  return true;
}

bool criterion5(std::string& detail) {
  for (const auto& name : fixture_names()) {
    const auto x = fixture_exact(name);
    const auto fast = enumerate_minimal_zeros(x);
    const auto brute = brute_force_minimal_zeros(x);
    if (!expect(fast.zeros.size() == brute.size(), "support family size differs on " + name, detail))
      return false;
    for (std::size_t i = 0; i < brute.size(); ++i)
      if (!expect(fast.zeros[i].support == brute[i].support, "support family differs on " + name, detail))
        return false;
  }
  return true;
}

bool criterion6(std::string& detail) {
  for (const auto& name : fixture_names()) {
    const auto r = analyzed(name);
    if (!expect(maximal_cliques(r.graph) == brute_force_maximal_cliques(r.graph),
                "clique list differs on " + name, detail))
      return false;
  }
  for (std::uint64_t i = 0; i < 50; ++i) {
    const int n = 2 + static_cast<int>(i % 11);  // 2..12
    const double prob = (i % 3 == 0) ? 0.2 : (i % 3 == 1) ? 0.5 : 0.8;
    const PlainGraph pg = random_graph(n, prob, 52000 + i);
    ZerosGraph g;
    g.vertex_count = pg.n;
    g.edges = pg.edges;
    if (!expect(maximal_cliques(g) == brute_force_maximal_cliques(g), "clique list differs on a random graph",
                detail))
      return false;
  }
  return true;
}

bool criterion7(std::string& detail) {
  for (const auto& name : {"example-x", "example-xbar", "horn", "zero-3"}) {
    const auto r = analyzed(name);
    const auto rep = oracle_equivalence(r.input, r.rep, 6);
    if (!expect(rep.ok(), std::string("grid violations on ") + name, detail)) return false;
  }
  return true;
}

bool criterion8(std::string& detail) {
  int produced = 0;
  for (std::uint64_t seed = 0; produced < 100; ++seed) {
    const int n = 3 + static_cast<int>(seed % 6);  // 3..8
    const double prob = (seed % 3 == 0) ? 0.2 : (seed % 3 == 1) ? 0.5 : 0.8;
    const PlainGraph g = random_graph(n, prob, 87000 + seed);
    if (!expect(round_trip(g), "round trip failed on seed " + std::to_string(87000 + seed), detail))
      return false;
    ++produced;
  }
  return true;
}

bool criterion9(std::string& detail) {
  for (const auto& name : fixture_names()) {
    const auto r = analyzed(name);
    const auto& x = r.input;
    bool ok = expect(r.clique_family.cover && r.clique_family.pstar_inside_m && r.clique_family.separation, "clique-family conditions fail on " + name, detail);
    ok &= expect(r.supports_incomparable, "support incomparability fails on " + name, detail);
    ok &= expect(r.pstars_incomparable, "P* incomparability fails on " + name, detail);
    for (const auto& z : r.zeros.zeros) {
      for (const auto& v : mat_vec(x, z.tau))
        ok &= expect(v.sign() >= 0, "X tau has a negative component on " + name, detail);
      for (int i : z.support.indices()) {
        const SupportSet rest = z.support.minus(SupportSet::of({i}));
        if (!rest.empty())
          ok &= expect(determinant(principal_submatrix(x, rest)).sign() != 0,
                       "determinant gate fails on " + name, detail);
      }
    }
    if (!ok) return false;
  }
  return true;
}

bool criterion10(std::string& detail) {
  for (const auto& name : fixture_names()) {
    const auto x = fixture_exact(name);
    for (const auto& z : enumerate_minimal_zeros(x).zeros) {
      if (z.support.size() < 2) continue;
      const auto reference = check_condition_B(x, z.support);
      for (int pivot : z.support.indices()) {
        const auto b = condition_b_with_pivot(x, z.support, pivot);
        if (!expect(b.holds && b.kernel_vector == reference.kernel_vector,
                    "pivot " + std::to_string(pivot + 1) + " changes the kernel vector on " + name, detail))
          return false;
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  run({1, "example X reproduction (zeros, M, graph, cliques, P*)", 1.0}, criterion1);
  run({2, "example Xbar reproduction (zeros, supports, M, graph)", 1.0}, criterion2);
  run({3, "graph equality G(X) = G(Xbar)", 0}, criterion3);
  run({4, "edge-definition equivalence on fixtures + 50 realizations", 0}, criterion4);
  run({5, "unpruned brute-force enumeration agreement on all fixtures", 5.0}, criterion5);
  run({6, "maximal-clique oracle on fixtures + 50 random graphs", 10.0}, criterion6);
  run({7, "representation completeness on the N=6 grid", 30.0}, criterion7);
  run({8, "round trips for 100 random graphs on 3..8 vertices", 30.0}, criterion8);
  run({9, "structural properties (clique family, incomparability, nonnegativity, det gate)", 0}, criterion9);
  run({10, "pivot independence of the (B)-test", 0}, criterion10);

  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}

#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "copzero/analysis.hpp"
#include "copzero/fixtures.hpp"
#include "copzero/parse.hpp"
#include "copzero/report.hpp"

using namespace copzero;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cmd(const std::string& cmd) {
  std::array<char, 4096> buf{};
  CliResult r{-1, {}};
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

CliResult run_cli(const std::string& args) {
  return run_cmd(std::string(COPZERO_CLI_PATH) + " " + args);
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/copzero-test-" + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_SUITE("parse") {
  TEST_CASE("text form") {
    SUBCASE("the example fixture parses to exact mode") {
      const auto m = parse_matrix(fixture_text("example-x"), std::nullopt, {});
      CHECK(mode_of_matrix(m) == Mode::exact);
      const auto& x = std::get<SymMatrix<Rational>>(m);
      CHECK(x.dim() == 5);
      CHECK(x.at(0, 2) == Rational(1));
      CHECK(x.at(0, 0) == Rational(0));
    }
    SUBCASE("single entry") {
      const auto m = parse_matrix("1", std::nullopt, {});
      CHECK(std::get<SymMatrix<Rational>>(m).dim() == 1);
    }
    SUBCASE("asymmetric input is a parse error") {
      CHECK_THROWS_AS(parse_matrix("1 2\n3 4", std::nullopt, {}), ParseError);
    }
    SUBCASE("ragged rows carry the offending row") {
      try {
        parse_matrix("1 2\n3", std::nullopt, {});
        FAIL("expected ParseError");
      } catch (const ParseError& e) {
        CHECK(e.row == 2);
      }
    }
    SUBCASE("unparseable token carries row and column") {
      try {
        parse_matrix("1 x\nx 1", std::nullopt, {});
        FAIL("expected ParseError");
      } catch (const ParseError& e) {
        CHECK(e.row == 1);
        CHECK(e.col == 2);
      }
    }
    SUBCASE("exponent literals fall back to float mode") {
      const auto m = parse_matrix("1 1e-3\n1e-3 1", std::nullopt, {});
      CHECK(mode_of_matrix(m) == Mode::floating);
      CHECK(std::get<SymMatrix<double>>(m).at(0, 1) == doctest::Approx(1e-3));
    }
    SUBCASE("forced float converts rationals") {
      const auto m = parse_matrix("0 1/2\n1/2 0", Mode::floating, {});
      CHECK(std::get<SymMatrix<double>>(m).at(0, 1) == 0.5);
    }
    SUBCASE("forced exact rejects non-rational entries") {
      CHECK_THROWS_AS(parse_matrix("1 1e-3\n1e-3 1", Mode::exact, {}), ParseError);
    }
  }

  TEST_CASE("JSON form") {
    const auto m = parse_matrix(R"({"p": 2, "rows": [[0, "1/2"], [0.5, 0]]})", std::nullopt, {});
    CHECK(mode_of_matrix(m) == Mode::exact);
    const auto& x = std::get<SymMatrix<Rational>>(m);
    CHECK(x.at(0, 1) == Rational(1, 2));
    CHECK_THROWS_AS(parse_matrix(R"({"p": 2, "rows": [[1, 2]]})", std::nullopt, {}), ParseError);
    CHECK_THROWS_AS(parse_matrix("{bad json", std::nullopt, {}), ParseError);
  }

  TEST_CASE("float ingestion") {
    SUBCASE("small asymmetry is symmetrized") {
      const auto x = SymMatrix<double>::from_rows({{1.0, 0.5 + 1e-12}, {0.5 - 1e-12, 1.0}});
      CHECK(x.at(0, 1) == x.at(1, 0));
      CHECK(x.at(0, 1) == doctest::Approx(0.5));
    }
    SUBCASE("asymmetry beyond tolerance is rejected") {
      CHECK_THROWS_AS(SymMatrix<double>::from_rows({{1.0, 0.7}, {0.5, 1.0}}), std::invalid_argument);
    }
    SUBCASE("non-finite entries are rejected") {
      CHECK_THROWS_AS(SymMatrix<double>::from_rows({{std::nan("")}}), std::invalid_argument);
      CHECK_THROWS_AS(SymMatrix<double>::from_rows({{HUGE_VAL}}), std::invalid_argument);
    }
  }

  TEST_CASE("points") {
    CHECK(std::get<std::vector<Rational>>(parse_point("1/2 1/2", Mode::exact)) ==
          std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
    CHECK(std::get<std::vector<double>>(parse_point("0.25 0.75", Mode::floating)) ==
          std::vector<double>{0.25, 0.75});
    CHECK_THROWS_AS(parse_point("", Mode::exact), ParseError);
    CHECK_THROWS_AS(parse_point("1/2 x", Mode::exact), ParseError);
  }

  TEST_CASE("edge lists") {
    const auto g = parse_edge_list("n 4\n1 2\n3 4\n");
    CHECK(g.n == 4);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
    CHECK_THROWS_AS(parse_edge_list("4\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n 4\n1 5\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n 4\n2 2\n"), ParseError);
  }
}

TEST_SUITE("report") {
  TEST_CASE("JSON round-trips byte-identically") {
    for (const auto& name : fixture_names()) {
      AnalysisOptions opt;
      opt.run_oracle = true;
      const auto x = std::get<SymMatrix<Rational>>(parse_matrix(fixture_text(name), std::nullopt, {}));
      const auto j = report_json(run_pipeline(x, opt));
      const std::string once = j.dump(2);
      CHECK(nlohmann::json::parse(once).dump(2) == once);
      CHECK(j.at("schema_version") == kSchemaVersion);
    }
  }

  TEST_CASE("exact scalars serialize as strings") {
    const auto x =
        std::get<SymMatrix<Rational>>(parse_matrix(fixture_text("example-xbar"), std::nullopt, {}));
    AnalysisOptions opt;
    opt.gate = false;
    const auto j = report_json(run_pipeline(x, opt));
    CHECK(j.at("minimal_zeros").at(0).at("tau").at(0) == "1/2");
    CHECK(j.at("input").at("rows").at(1).at(4) == "3/2");
    CHECK(j.at("minimal_zeros").at(0).at("M") == nlohmann::json::array({1, 2, 3}));
  }

  TEST_CASE("DOT output is well-formed") {
    const auto x = std::get<SymMatrix<Rational>>(parse_matrix(fixture_text("horn"), std::nullopt, {}));
    AnalysisOptions opt;
    opt.gate = false;
    const auto r = run_pipeline(x, opt);
    const std::string dot = graph_dot(r.graph, r.e);
    CHECK(std::count(dot.begin(), dot.end(), '{') == std::count(dot.begin(), dot.end(), '}'));
    for (int v = 1; v <= r.graph.vertex_count; ++v)
      CHECK(dot.find("n" + std::to_string(v) + " [label=") != std::string::npos);
    for (auto [i, j] : r.graph.edges)
      CHECK(dot.find("n" + std::to_string(i + 1) + " -- n" + std::to_string(j + 1)) != std::string::npos);
    CHECK(dot.rfind("}\n") == dot.size() - 2);
  }

  TEST_CASE("float and exact pipelines agree on rational fixtures") {
    for (const auto& name : fixture_names()) {
      AnalysisOptions opt;
      opt.gate = false;
      const auto xe = std::get<SymMatrix<Rational>>(parse_matrix(fixture_text(name), std::nullopt, {}));
      const auto xf = std::get<SymMatrix<double>>(parse_matrix(fixture_text(name), Mode::floating, {}));
      const auto re = run_pipeline(xe, opt);
      const auto rf = run_pipeline(xf, opt);
      REQUIRE(re.zeros.zeros.size() == rf.zeros.zeros.size());
      for (std::size_t i = 0; i < re.zeros.zeros.size(); ++i) {
        CHECK(re.zeros.zeros[i].support == rf.zeros.zeros[i].support);
        for (std::size_t k = 0; k < re.zeros.zeros[i].tau.size(); ++k)
          CHECK(std::fabs(re.zeros.zeros[i].tau[k].to_double() - rf.zeros.zeros[i].tau[k]) < 1e-9);
      }
      CHECK(re.graph == rf.graph);
      CHECK(re.cliques == rf.cliques);
      REQUIRE(re.rep.components.size() == rf.rep.components.size());
      for (std::size_t s = 0; s < re.rep.components.size(); ++s)
        CHECK(re.rep.components[s].p_star == rf.rep.components[s].p_star);
    }
  }
}

TEST_SUITE("cli") {
  TEST_CASE("analyze fixture, text and json") {
    const auto text = run_cli("analyze --fixture example-x");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("minimal zeros: 4") != std::string::npos);

    const auto json = run_cli("analyze --fixture example-x --json");
    CHECK(json.exit_code == 0);
    const auto j = nlohmann::json::parse(json.out);
    CHECK(j.at("minimal_zeros").size() == 4);
    CHECK(j.at("graph").at("edges") == nlohmann::json::parse("[[1,2],[3,4]]"));
  }

  TEST_CASE("exit codes") {
    const auto bad = run_cli("analyze " + write_temp("noncop.txt", "1 -3\n-3 1\n"));
    CHECK(bad.exit_code == 2);
    const auto err = run_cli("analyze " + write_temp("ragged.txt", "1 2\n3\n"));
    CHECK(err.exit_code == 1);
    CHECK(err.out.find("error:") != std::string::npos);
    const auto unknown = run_cli("analyze --fixture no-such-fixture");
    CHECK(unknown.exit_code == 1);
  }

  TEST_CASE("check-copositive") {
    CHECK(run_cli("check-copositive --fixture horn").exit_code == 0);
    const auto r = run_cli("check-copositive " + write_temp("neg.txt", "-1\n"));
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("NO") != std::string::npos);
  }

  TEST_CASE("stage subcommands") {
    const auto zeros = run_cli("minimal-zeros --fixture example-xbar --json");
    CHECK(zeros.exit_code == 0);
    CHECK(nlohmann::json::parse(zeros.out).size() == 4);

    const auto dot = run_cli("graph --dot --fixture example-x");
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.find("graph minimal_zeros {") == 0);

    const auto cliques = run_cli("cliques --fixture horn --json");
    CHECK(nlohmann::json::parse(cliques.out).size() == 5);

    const auto rep = run_cli("representation --fixture example-xbar --json");
    const auto jr = nlohmann::json::parse(rep.out);
    CHECK(jr.at("components").at(0).at("P_star") == nlohmann::json::parse("[1,2,3]"));
  }

  TEST_CASE("membership and verify") {
    const std::string point = write_temp("point.txt", "1/2 1/2 0 0 0\n");
    const auto m = run_cli("membership --point " + point + " --fixture example-x --json");
    CHECK(m.exit_code == 0);
    const auto jm = nlohmann::json::parse(m.out);
    CHECK(jm.at("is_zero") == true);
    CHECK(jm.at("components") == nlohmann::json::parse("[1]"));

    const auto v = run_cli("verify --grid 6 --fixture horn --json");
    CHECK(v.exit_code == 0);
    const auto jv = nlohmann::json::parse(v.out);
    CHECK(jv.at("verification").at("oracle").at("violations").empty());
  }

  TEST_CASE("from-graph emits the realization") {
    const std::string edges = write_temp("g.edges", "n 3\n1 2\n");
    const auto r = run_cli("from-graph " + edges);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0 0 1\n0 0 1\n1 1 0\n");
  }

  TEST_CASE("COPZERO_MODE environment override") {
    const std::string m = write_temp("m.txt", "0 1/2\n1/2 0\n");
    const auto exact = run_cli("minimal-zeros --json " + m);  // exact by default
    CHECK(nlohmann::json::parse(exact.out).at(0).at("tau").at(0).is_string());

    const auto env = run_cmd("COPZERO_MODE=float " + std::string(COPZERO_CLI_PATH) + " minimal-zeros --json " + m);
    CHECK(nlohmann::json::parse(env.out).at(0).at("tau").at(0).is_number());

    // an explicit --mode beats the environment
    const auto flag = run_cmd("COPZERO_MODE=float " + std::string(COPZERO_CLI_PATH) +
                              " minimal-zeros --mode exact --json " + m);
    CHECK(nlohmann::json::parse(flag.out).at(0).at("tau").at(0).is_string());
  }

  TEST_CASE("stdin input") {
    const auto r = run_cmd("echo '0' | " + std::string(COPZERO_CLI_PATH) + " minimal-zeros --json");
    CHECK(nlohmann::json::parse(r.out).size() == 1);  // [[0]] has the single zero e1
  }

  TEST_CASE("tolerance flags land in the report metadata") {
    const auto r = run_cli("analyze --fixture example-x --json --rank-eps 1e-7 --zero-eps 1e-8");
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("input").at("tolerances").at("rank_eps") == 1e-7);
    CHECK(j.at("input").at("tolerances").at("zero_eps") == 1e-8);
    CHECK(j.at("input").at("tolerances").at("positivity_eps") == 1e-10);
  }

  TEST_CASE("--serial produces the same report") {
    const auto par = run_cli("analyze --fixture horn --json");
    const auto ser = run_cli("analyze --fixture horn --json --serial");
    CHECK(par.out == ser.out);
  }
}

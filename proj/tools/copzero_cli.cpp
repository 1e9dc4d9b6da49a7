// Command-line surface for the copositive-zeros pipeline: matrix ingestion,
// per-stage subcommands, JSON/text/DOT output, built-in fixtures.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "copzero/analysis.hpp"
#include "copzero/fixtures.hpp"
#include "copzero/parse.hpp"
#include "copzero/report.hpp"

namespace {

using namespace copzero;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotCopositive = 2;

struct CommonOpts {
  std::string mode;         // "", "exact", "float"
  std::string fixture;
  std::string input_path;   // "-" or empty means stdin
  bool json = false;
  bool serial = false;
  Tolerances tol;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_input = true) {
  cmd->add_option("--mode", o.mode, "arithmetic mode: exact or float")
      ->check(CLI::IsMember({"exact", "float"}));
  cmd->add_option("--rank-eps", o.tol.rank_eps, "relative rank threshold (float mode)");
  cmd->add_option("--zero-eps", o.tol.zero_eps, "scalar-is-zero threshold (float mode)");
  cmd->add_option("--positivity-eps", o.tol.positivity_eps, "strict-positivity threshold (float mode)");
  cmd->add_flag("--json", o.json, "emit the JSON report instead of text");
  cmd->add_flag("--serial", o.serial, "run the scan kernels single-threaded");
  if (with_input) {
    cmd->add_option("--fixture", o.fixture, "built-in matrix: example-x, example-xbar, horn, identity-3, zero-3");
    cmd->add_option("input", o.input_path, "matrix file ('-' or omitted reads stdin)");
  }
}

std::string read_input(const CommonOpts& o) {
  if (!o.fixture.empty()) return fixture_text(o.fixture);
  if (o.input_path.empty() || o.input_path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(o.input_path);
  if (!f) throw ParseError("cannot open input file '" + o.input_path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::optional<Mode> requested_mode(const CommonOpts& o) {
  std::string m = o.mode;
  if (m.empty()) {
    if (const char* env = std::getenv("COPZERO_MODE")) m = env;
  }
  if (m.empty()) return std::nullopt;
  if (m == "exact") return Mode::exact;
  if (m == "float") return Mode::floating;
  throw ParseError("COPZERO_MODE must be 'exact' or 'float', got '" + m + "'");
}

AnyMatrix load_matrix(const CommonOpts& o) {
  return parse_matrix(read_input(o), requested_mode(o), o.tol);
}

AnalysisOptions analysis_options(const CommonOpts& o) {
  AnalysisOptions opt;
  opt.exec = o.serial ? Exec::serial : Exec::parallel;
  return opt;
}

template <typename S>
int emit_report(const PipelineResult<S>& r, const CommonOpts& o) {
  if (o.json)
    std::cout << report_json(r).dump(2) << "\n";
  else
    std::cout << report_text(r);
  if (r.verdict && !r.verdict->is_copositive) return kExitNotCopositive;
  return kExitOk;
}

int run_analyze(const CommonOpts& o, bool skip_gate, std::optional<int> grid) {
  AnalysisOptions opt = analysis_options(o);
  opt.gate = !skip_gate;
  if (grid) {
    opt.run_oracle = true;
    opt.grid_n = *grid;
  }
  return std::visit([&](const auto& x) { return emit_report(run_pipeline(x, opt), o); }, load_matrix(o));
}

int run_check_copositive(const CommonOpts& o) {
  return std::visit(
      [&](const auto& x) {
        const auto v = check_copositive(x);
        if (o.json) {
          nlohmann::json j;
          j["is_copositive"] = v.is_copositive;
          j["method"] = method_name(v.method);
          if (v.witness) {
            nlohmann::json w = nlohmann::json::array();
            for (const auto& c : *v.witness) w.push_back(scalar_str(c));
            j["witness"] = std::move(w);
          } else {
            j["witness"] = nullptr;
          }
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << "copositive: " << (v.is_copositive ? "yes" : "NO") << " (" << method_name(v.method) << ")\n";
          if (v.witness) {
            std::cout << "witness t =";
            for (const auto& c : *v.witness) std::cout << " " << scalar_str(c);
            std::cout << "\n";
          }
        }
        return v.is_copositive ? kExitOk : kExitNotCopositive;
      },
      load_matrix(o));
}

int run_stage(const CommonOpts& o, const std::string& stage, bool dot) {
  AnalysisOptions opt = analysis_options(o);
  opt.gate = false;  // stage views skip the gate; `analyze` is the gated path
  return std::visit(
      [&](const auto& x) {
        const auto r = run_pipeline(x, opt);
        const nlohmann::json j = report_json(r);
        if (stage == "graph" && dot) {
          std::cout << graph_dot(r.graph, r.e);
          return kExitOk;
        }
        if (o.json) {
          nlohmann::json out;
          if (stage == "minimal-zeros")
            out = j.at("minimal_zeros");
          else if (stage == "graph")
            out = j.at("graph");
          else if (stage == "cliques")
            out = j.at("cliques");
          else
            out = j.at("representation");
          std::cout << out.dump(2) << "\n";
          return kExitOk;
        }
        std::cout << report_text(r);
        return kExitOk;
      },
      load_matrix(o));
}

int run_membership(const CommonOpts& o, const std::string& point_path) {
  const std::string point_text = read_file(point_path);
  AnalysisOptions opt = analysis_options(o);
  opt.gate = false;
  return std::visit(
      [&](const auto& x) {
        using S = std::decay_t<decltype(x.at(0, 0))>;
        const auto r = run_pipeline(x, opt);
        const AnyVector pv = parse_point(point_text, mode_of<S>);
        std::vector<S> t;
        if constexpr (mode_of<S> == Mode::exact)
          t = std::get<std::vector<Rational>>(pv);
        else
          t = std::get<std::vector<double>>(pv);
        if (static_cast<int>(t.size()) != x.dim()) throw ParseError("point dimension does not match the matrix");
        const bool zero = is_zero(x, t);
        const std::vector<int> members = component_membership(r.rep, x, t);
        if (o.json) {
          nlohmann::json j;
          j["is_zero"] = zero;
          nlohmann::json ms = nlohmann::json::array();
          for (int s : members) ms.push_back(s + 1);
          j["components"] = std::move(ms);
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << "is_zero: " << (zero ? "yes" : "no") << "\ncomponents:";
          for (int s : members) std::cout << " " << s + 1;
          std::cout << "\n";
        }
        return kExitOk;
      },
      load_matrix(o));
}

int run_from_graph(const std::string& edge_path) {
  const PlainGraph g = parse_edge_list(read_file(edge_path));
  std::cout << matrix_to_text(matrix_from_graph(g));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal zeros, zero graph, and zero-set representation of a copositive matrix"};
  app.require_subcommand(1);

  CommonOpts o;
  bool skip_gate = false;
  int grid_n = 6;
  bool dot = false;
  std::string point_path, edge_path;

  auto* analyze = app.add_subcommand("analyze", "full pipeline with the copositivity gate");
  add_common(analyze, o);
  analyze->add_flag("--skip-gate", skip_gate, "skip the copositivity check");

  auto* check = app.add_subcommand("check-copositive", "copositivity verdict only");
  add_common(check, o);

  auto* zeros = app.add_subcommand("minimal-zeros", "enumerate the normalized minimal zeros");
  add_common(zeros, o);

  auto* graph = app.add_subcommand("graph", "minimal zeros graph G(X)");
  add_common(graph, o);
  graph->add_flag("--dot", dot, "emit Graphviz DOT");

  auto* cliques = app.add_subcommand("cliques", "maximal cliques of G(X)");
  add_common(cliques, o);

  auto* rep = app.add_subcommand("representation", "minimal representation of the zero set");
  add_common(rep, o);

  auto* membership = app.add_subcommand("membership", "component membership of a simplex point");
  add_common(membership, o);
  membership->add_option("--point", point_path, "file with the point's entries")->required();

  auto* verify = app.add_subcommand("verify", "grid validation of the representation");
  add_common(verify, o);
  verify->add_option("--grid", grid_n, "grid denominator N")->check(CLI::PositiveNumber);

  auto* fromg = app.add_subcommand("from-graph", "matrix realizing an edge-list graph");
  fromg->add_option("edgelist", edge_path, "edge list file: 'n <count>' then 1-based 'i j' lines")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) return run_analyze(o, skip_gate, std::nullopt);
    if (app.got_subcommand(check)) return run_check_copositive(o);
    if (app.got_subcommand(zeros)) return run_stage(o, "minimal-zeros", false);
    if (app.got_subcommand(graph)) return run_stage(o, "graph", dot);
    if (app.got_subcommand(cliques)) return run_stage(o, "cliques", false);
    if (app.got_subcommand(rep)) return run_stage(o, "representation", false);
    if (app.got_subcommand(membership)) return run_membership(o, point_path);
    if (app.got_subcommand(verify)) return run_analyze(o, true, grid_n);
    if (app.got_subcommand(fromg)) return run_from_graph(edge_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

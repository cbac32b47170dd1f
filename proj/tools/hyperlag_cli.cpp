// hyperlag: command-line front end.
//
//   hyperlag compute FILE|-            Lagrangian of an edge-list graph
//   hyperlag colex --r R --m M          the colex graph C_{r,m}
//   hyperlag colex --rank "1 2 5"       colex rank of a tuple
//   hyperlag colex --r R --unrank K     k-th r-tuple in colex order
//   hyperlag enumerate --r R --t T --m M [--count-only]
//   hyperlag verify [--config FILE] [--csv FILE] [--timings]
//
// Exit status: 0 success, 1 failed check or solver failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hyperlag/edge_list.hpp"
#include "hyperlag/enumeration.hpp"
#include "hyperlag/hypergraph.hpp"
#include "hyperlag/lagrangian.hpp"
#include "hyperlag/tuple_order.hpp"
#include "hyperlag/verify.hpp"

namespace {

using hyperlag::json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Globals {
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::optional<int> restarts;
  bool json = false;
  std::string out;
};

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

hyperlag::SolverConfig solver_config(const Globals& g) {
  hyperlag::SolverConfig cfg;
  if (g.seed) cfg.seed = *g.seed;
  if (g.tol) cfg.value_tol = *g.tol;
  if (g.restarts) cfg.restarts = *g.restarts;
  cfg.validate();
  return cfg;
}

hyperlag::Hypergraph read_graph(const std::string& path) {
  if (path == "-") return hyperlag::parse_edge_list(std::string(std::istreambuf_iterator<char>(std::cin), {}));
  std::ifstream in(path);
  if (!in) throw hyperlag::ParseError("cannot open " + path);
  auto g = hyperlag::read_edge_list(in);
  if (!g) throw hyperlag::ParseError(path + ": empty edge list");
  return std::move(*g);
}

json edges_json(const hyperlag::Hypergraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back(e.elems());
  return {{"r", g.uniformity()}, {"n", g.vertex_count()}, {"edges", edges}};
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(g.out);
  if (!file) throw hyperlag::ParseError("cannot write " + g.out);
  file << text;
}

int run_compute(const Globals& g, const std::string& path) {
  const auto graph = read_graph(path);
  const auto est = hyperlag::solve(graph, solver_config(g));
  emit(g, g.json ? hyperlag::estimate_to_json(est).dump(2) + "\n" : format_value(est.value) + "\n");
  return kOk;
}

struct ColexArgs {
  std::optional<int> r;
  std::optional<std::uint64_t> m;
  std::optional<std::string> rank;
  std::optional<std::uint64_t> unrank;
};

int run_colex(const Globals& g, const ColexArgs& a) {
  const int modes = (a.m ? 1 : 0) + (a.rank ? 1 : 0) + (a.unrank ? 1 : 0);
  if (modes != 1) throw CLI::ValidationError("colex", "give exactly one of --m, --rank, --unrank");
  if (a.rank) {
    const auto tuple = hyperlag::RTuple::from_text(*a.rank);
    const auto rank = hyperlag::colex_rank(tuple);
    emit(g, g.json ? json{{"tuple", tuple.elems()}, {"rank", rank}}.dump(2) + "\n" : std::to_string(rank) + "\n");
    return kOk;
  }
  if (!a.r) throw CLI::ValidationError("colex", "--r is required with --m and --unrank");
  if (a.unrank) {
    const auto tuple = hyperlag::colex_unrank(*a.r, *a.unrank);
    emit(g, g.json ? json{{"rank", *a.unrank}, {"tuple", tuple.elems()}}.dump(2) + "\n" : tuple.to_text() + "\n");
    return kOk;
  }
  const auto graph = hyperlag::colex_graph(*a.r, *a.m);
  emit(g, g.json ? edges_json(graph).dump(2) + "\n" : hyperlag::to_edge_list(graph));
  return kOk;
}

struct EnumerateArgs {
  int r = 0;
  int t = 0;
  std::uint64_t m = 0;
  bool count_only = false;
};

int run_enumerate(const Globals& g, const EnumerateArgs& a) {
  if (a.count_only) {
    const auto count = hyperlag::count_left_compressed(a.r, a.t, a.m);
    emit(g, g.json ? json{{"r", a.r}, {"t", a.t}, {"m", a.m}, {"count", count}}.dump(2) + "\n"
                   : std::to_string(count) + "\n");
    return kOk;
  }
  auto stream = hyperlag::enumerate_left_compressed(a.r, a.t, a.m);
  std::ostringstream text;
  json graphs = json::array();
  bool first = true;
  while (auto graph = stream.next()) {
    if (g.json) {
      graphs.push_back(edges_json(*graph));
    } else {
      if (!first) text << '\n';
      hyperlag::write_edge_list(text, *graph);
    }
    first = false;
  }
  emit(g, g.json ? graphs.dump(2) + "\n" : text.str());
  return kOk;
}

struct VerifyArgs {
  std::string config;
  std::string csv;
  bool timings = false;
};

int run_verify(const Globals& g, const VerifyArgs& a) {
  hyperlag::SuiteConfig cfg = hyperlag::SuiteConfig::defaults();
  if (!a.config.empty()) {
    std::ifstream in(a.config);
    if (!in) throw hyperlag::ParseError("cannot open " + a.config);
    try {
      cfg = hyperlag::SuiteConfig::from_json(json::parse(in));
    } catch (const json::exception& e) {
      throw hyperlag::ParseError(a.config + ": " + e.what());
    }
  }
  if (g.seed) cfg.seed = *g.seed;
  if (g.tol) cfg.tolerance = *g.tol;
  if (g.restarts) cfg.restarts = *g.restarts;

  const auto report = hyperlag::run_suite(cfg);
  if (!a.csv.empty()) {
    std::ofstream csv(a.csv);
    if (!csv) throw hyperlag::ParseError("cannot write " + a.csv);
    csv << hyperlag::report_csv(report, a.timings);
  }
  std::string text;
  if (g.json) {
    text = hyperlag::report_json(report, a.timings).dump(2) + "\n";
  } else {
    std::ostringstream lines;
    for (const auto& c : report.checks) {
      lines << (c.passed ? "PASS " : "FAIL ") << c.claim_id << ' ' << c.params.dump();
      if (a.timings) lines << ' ' << format_value(c.runtime_s) << 's';
      lines << '\n';
    }
    lines << (report.passed() ? "all checks passed" : "some checks failed") << '\n';
    text = lines.str();
  }
  emit(g, text);
  return report.passed() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lagrangians of uniform hypergraphs"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--seed", globals.seed, "Random seed for solver restarts");
  app.add_option("--tol", globals.tol, "Value tolerance")->check(CLI::PositiveNumber);
  app.add_option("--restarts", globals.restarts, "Random restarts per solve")->check(CLI::NonNegativeNumber);
  app.add_flag("--json", globals.json, "Emit JSON");
  app.add_option("--out", globals.out, "Write output to FILE instead of stdout");

  std::string compute_path;
  auto* compute = app.add_subcommand("compute", "Lagrangian of an edge-list graph");
  compute->add_option("file", compute_path, "Edge-list file, or - for stdin")->required();

  ColexArgs colex_args;
  auto* colex = app.add_subcommand("colex", "Colex graphs, ranks and tuples");
  colex->add_option("--r", colex_args.r, "Uniformity");
  colex->add_option("--m", colex_args.m, "Emit the first m r-tuples in colex order");
  colex->add_option("--rank", colex_args.rank, "Colex rank of a tuple, e.g. \"1 2 5\"");
  colex->add_option("--unrank", colex_args.unrank, "The k-th r-tuple in colex order");

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "Left-compressed r-graphs on [t] with m edges");
  enumerate->add_option("--r", enum_args.r, "Uniformity")->required();
  enumerate->add_option("--t", enum_args.t, "Vertex count")->required();
  enumerate->add_option("--m", enum_args.m, "Edge count")->required();
  enumerate->add_flag("--count-only", enum_args.count_only, "Print only the number of graphs");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--config", verify_args.config, "Suite configuration (JSON)");
  verify->add_option("--csv", verify_args.csv, "Also write a CSV summary to FILE");
  verify->add_flag("--timings", verify_args.timings, "Record runtimes in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*compute) return run_compute(globals, compute_path);
    if (*colex) return run_colex(globals, colex_args);
    if (*enumerate) return run_enumerate(globals, enum_args);
    if (*verify) return run_verify(globals, verify_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const hyperlag::SolverFailure& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const hyperlag::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

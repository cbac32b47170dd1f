// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
//
//   acceptance [WORK_DIR]
//
// WORK_DIR receives the two verify reports compared by criterion 9.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hyperlag/verify.hpp"
#include "oracles.hpp"

using namespace hyperlag;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const Outcome& o) {
  std::cout << "criterion " << id << ": " << (o.passed ? "PASS" : "FAIL") << "  " << name;
  if (!o.detail.empty()) std::cout << "  [" << o.detail << "]";
  std::cout << std::endl;
  if (!o.passed) ++failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

VerifyContext context() {
  VerifyContext ctx;
  ctx.solver.seed = 42;
  return ctx;
}

// Every solver result gathered by criteria 1-7, for the optimality checks.
std::vector<SolvedGraph> audit;

void keep(const CheckResult& c) { audit.insert(audit.end(), c.solved.begin(), c.solved.end()); }

Outcome motzkin_straus() {
  const auto c = check_motzkin_straus(6, 200, context(), 42);
  keep(c);
  return {c.passed && c.observed["graphs_tested"] == 1223 && c.runtime_s < 60,
          std::to_string(c.observed["graphs_tested"].get<int>()) + " graphs, max error " +
              fmt(c.observed["max_abs_error"].get<double>()) + ", " + fmt(c.runtime_s) + " s"};
}

Outcome complete_graphs() {
  Outcome o;
  int n = 0;
  double worst_pair = 0.0;
  for (int t = 2; t <= 8; ++t) {
    const auto c = check_complete_graph(2, t, context());
    keep(c);
    o.passed = o.passed && c.passed;
    worst_pair = std::max(worst_pair, std::abs(c.observed["solve"].get<double>() - c.expected["value"].get<double>()));
    ++n;
  }
  for (auto [r, t] : {std::pair{3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}}) {
    const auto c = check_complete_graph(r, t, context());
    keep(c);
    o.passed = o.passed && c.passed;
    ++n;
  }
  o.detail = std::to_string(n) + " graphs, closed-form error " + fmt(worst_pair);
  return o;
}

Outcome colex_plateau() {
  Outcome o;
  double worst = 0.0;
  for (int t : {5, 6}) {
    const auto c = check_colex_plateau(3, t, context());
    keep(c);
    o.passed = o.passed && c.passed;
    worst = std::max(worst, c.observed["max_abs_deviation"].get<double>());
  }
  o.detail = "m in 4..7 and 10..16, max deviation " + fmt(worst);
  return o;
}

const std::vector<std::pair<int, int>> kTopCases{{3, 6}, {3, 7}, {3, 8}, {4, 7}, {4, 8}, {5, 8}};

std::vector<CheckResult> three_removed;

Outcome three_removed_count() {
  Outcome o;
  std::string counts;
  for (auto [r, t] : kTopCases) {
    const auto m = binomial(t, r) - 3;
    const auto count = count_left_compressed(r, t, m);
    o.passed = o.passed && count == 2;
    counts += (counts.empty() ? "" : " ") + std::to_string(count);
    three_removed.push_back(check_colex_max_on_t(r, t, 3, context()));
    keep(three_removed.back());
  }
  o.detail = "counts " + counts;
  return o;
}

Outcome three_removed_colex_max() {
  Outcome o;
  std::string gaps;
  for (const auto& c : three_removed) {
    const bool ok = c.passed && c.observed["min_gap_colex_minus_other"].get<double>() >= -1e-9;
    o.passed = o.passed && ok;
    gaps += (gaps.empty() ? "" : " ") + fmt(c.observed["min_gap_colex_minus_other"].get<double>());
  }
  o.detail = "gaps " + gaps;
  return o;
}

Outcome four_removed() {
  Outcome o;
  std::string gaps;
  for (auto [r, t] : kTopCases) {
    const auto c = check_colex_max_on_t(r, t, 4, context());
    keep(c);
    const bool ok = c.passed && c.observed["count"] == 3 &&
                    c.observed["min_gap_colex_minus_other"].get<double>() >= -1e-9;
    o.passed = o.passed && ok;
    gaps += (gaps.empty() ? "" : " ") + fmt(c.observed["min_gap_colex_minus_other"].get<double>());
  }
  o.detail = "count 3 each, gaps " + gaps;
  return o;
}

Outcome colex_global() {
  Outcome o;
  double runtime = 0.0;
  std::uint64_t graphs = 0;
  for (int t : {5, 6}) {
    for (int k : {3, 4}) {
      const auto c = check_colex_global(t, k, context());
      keep(c);
      const auto bound = check_support_bound(c);
      o.passed = o.passed && c.passed && bound.passed;
      runtime += c.runtime_s;
      graphs += c.observed["graphs_tested"].get<std::uint64_t>();
    }
  }
  o.passed = o.passed && runtime < 120;
  o.detail = std::to_string(graphs) + " graphs on up to t+1 vertices, " + fmt(runtime) + " s";
  return o;
}

Outcome properties() {
  std::vector<std::string> broken;
  std::mt19937_64 rng(2024);

  // Shift identity.
  int cases = 0;
  while (cases < 10'000) {
    const int r = 2 + cases % 4;
    const int n = r + 1 + cases % 5;
    const auto g = oracle::random_graph(r, n, 0.6, rng);
    const Weighting x(oracle::random_weighting(n, rng));
    std::uniform_int_distribution<int> vertex(1, n);
    const Vertex i = vertex(rng), j = vertex(rng);
    if (i == j) continue;
    const double delta = std::uniform_real_distribution<double>(-x[i], x[j])(rng);
    const double lhs = evaluate(g, shift(x, i, j, delta)) - evaluate(g, x);
    const double rhs = delta * (partial(g, x, i) - partial(g, x, j)) - delta * delta * pair_partial(g, x, i, j);
    if (std::abs(lhs - rhs) > 1e-12) {
      broken.push_back("shift identity");
      break;
    }
    ++cases;
  }

  // Growth-transform monotonicity.
  for (int trial = 0; trial < 1000; ++trial) {
    const int r = 2 + trial % 3;
    const auto g = oracle::random_graph(r, r + 2 + trial % 4, 0.5, rng);
    if (g.edge_count() == 0) continue;
    const GraphPolynomial p(g);
    auto x = oracle::random_weighting(g.vertex_count(), rng, 0.0);
    double prev = p.value(x), worst = 0.0;
    growth_ascent(p, x, 200, 0.0, [&](double v) {
      worst = std::min(worst, v - prev);
      prev = v;
    });
    if (worst < -1e-13) {
      broken.push_back("growth monotonicity");
      break;
    }
  }

  // Stationarity and pair coverage on every solver output of criteria 1-7.
  double worst_residual = 0.0;
  std::size_t uncovered = 0;
  for (const auto& s : audit) {
    worst_residual = std::max(worst_residual, s.estimate.residual);
    worst_residual = std::max(worst_residual, stationarity_residual(s.graph, s.estimate.witness));
    if (!support_pairs_covered(s.graph, s.estimate.witness)) ++uncovered;
  }
  if (worst_residual > 1e-9) broken.push_back("stationarity residual " + fmt(worst_residual));
  if (uncovered > 0) broken.push_back(std::to_string(uncovered) + " witnesses with uncovered pairs");

  // Subgraph monotonicity.
  SolverConfig cfg;
  cfg.restarts = 16;
  for (int pair = 0; pair < 500; ++pair) {
    const int r = 2 + pair % 3;
    const auto g = oracle::random_graph(r, r + 1 + pair % 4, 0.6, rng);
    if (g.edge_count() == 0) continue;
    std::bernoulli_distribution keep_edge(0.6);
    std::vector<RTuple> sub;
    for (const auto& e : g.edges()) {
      if (keep_edge(rng)) sub.push_back(e);
    }
    if (sub.empty()) sub.push_back(g.edges().front());
    if (solve(Hypergraph(r, g.vertex_count(), sub), cfg).value > solve(g, cfg).value + 1e-9) {
      broken.push_back("subgraph monotonicity");
      break;
    }
  }

  // Colex rank round trip.
  std::uniform_int_distribution<std::uint64_t> pick(1, 10'000'000);
  int round_trip_errors = 0;
  for (int n = 0; n < 10'000; ++n) {
    const int r = 2 + n % 4;
    const auto k = pick(rng);
    if (colex_rank(colex_unrank(r, k)) != k) ++round_trip_errors;
  }
  if (round_trip_errors > 0) broken.push_back("rank round trip");

  // Enumeration against subset filtering.
  for (int t = 3; t <= 5; ++t) {
    for (int m = 0; m <= static_cast<int>(binomial(t, 3)); ++m) {
      std::set<std::set<oracle::Set>> got;
      std::size_t emitted = 0;
      auto stream = enumerate_left_compressed(3, t, static_cast<std::uint64_t>(m));
      while (auto g = stream.next()) {
        got.insert(oracle::edge_sets(*g));
        ++emitted;
      }
      if (emitted != got.size() || got != oracle::left_compressed_graphs(3, t, m)) {
        broken.push_back("enumeration t=" + std::to_string(t) + " m=" + std::to_string(m));
      }
    }
  }

  Outcome o;
  o.passed = broken.empty();
  o.detail = std::to_string(audit.size()) + " solver outputs audited, residual " + fmt(worst_residual);
  for (const auto& b : broken) o.detail += "; broken: " + b;
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Outcome determinism(const std::string& work) {
  std::vector<std::string> reports;
  for (int run = 1; run <= 2; ++run) {
    const std::string path = work + "/acceptance_verify_" + std::to_string(run) + ".json";
    const std::string cmd = std::string("\"") + HYPERLAG_CLI + "\" verify --seed 42 --json --out \"" + path + "\"";
    const int rc = std::system(cmd.c_str());
    if (rc != 0) return {false, "verify run " + std::to_string(run) + " exited with status " + std::to_string(rc)};
    reports.push_back(slurp(path));
  }
  const bool same = !reports[0].empty() && reports[0] == reports[1];
  return {same, std::to_string(reports[0].size()) + " bytes, " + (same ? "identical" : "different")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string work = argc > 1 ? argv[1] : ".";
  report(1, "Motzkin-Straus on all 5-vertex and 200 random 6-vertex graphs", motzkin_straus());
  report(2, "complete-graph values against closed form, reduced solver and exact lattice", complete_graphs());
  report(3, "colex plateau for 3-graphs on 5 and 6 vertices", colex_plateau());
  report(4, "two left-compressed graphs with three tuples removed", three_removed_count());
  report(5, "colex graph maximal with three tuples removed", three_removed_colex_max());
  report(6, "three graphs with four tuples removed, colex maximal", four_removed());
  report(7, "colex maximal among all left-compressed 3-graphs (t = 5, 6)", colex_global());
  report(8, "property suites", properties());
  report(9, "verify --seed 42 reports are byte-identical", determinism(work));
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}

#include <gtest/gtest.h>

#include "hyperlag/verify.hpp"

using namespace hyperlag;

namespace {
VerifyContext context() {
  VerifyContext ctx;
  ctx.solver.restarts = 32;
  return ctx;
}

SuiteConfig small_suite() {
  SuiteConfig cfg;
  cfg.checks = {{claims::kColexPlateau, {{"r", 3}, {"t", 5}}},
                {claims::kCompleteGraph, {{"r", 2}, {"t", 4}}},
                {claims::kColexGlobal, {{"t", 5}, {"k", 3}}},
                {claims::kSupportBound, {{"t", 5}, {"k", 3}}},
                {claims::kColexMaxOnT, {{"r", 3}, {"t", 6}, {"k", 4}}}};
  return cfg;
}
}  // namespace

TEST(Checks, ColexPlateau) {
  const auto c = check_colex_plateau(3, 5, context());
  EXPECT_TRUE(c.passed);
  EXPECT_EQ(c.observed["m_range"], json({4, 7}));
  EXPECT_NEAR(c.observed["lambda_complete_t_minus_1"].get<double>(), 0.0625, 1e-12);

  const auto pairs = check_colex_plateau(2, 4, context());
  EXPECT_TRUE(pairs.passed);
  for (const auto& v : pairs.observed["values"]) EXPECT_NEAR(v["lambda"].get<double>(), 1.0 / 3, 1e-8);
  EXPECT_THROW(check_colex_plateau(3, 3, context()), OutOfRange);
}

TEST(Checks, ThreeRemoved) {
  for (auto [r, t] : {std::pair{3, 6}, {4, 7}, {3, 5}}) {
    const auto c = check_colex_max_on_t(r, t, 3, context());
    EXPECT_TRUE(c.passed) << c.observed.dump();
    EXPECT_EQ(c.observed["count"], 2);
    EXPECT_GE(c.observed["min_gap_colex_minus_other"].get<double>(), -1e-9);
  }
  const auto small = check_colex_max_on_t(3, 5, 3, context());
  EXPECT_NEAR(small.observed["lambda_colex"].get<double>(), 1.0 / 16, 1e-9);
}

TEST(Checks, FourRemoved) {
  for (auto [r, t] : {std::pair{3, 6}, {4, 7}, {3, 7}}) {
    const auto c = check_colex_max_on_t(r, t, 4, context());
    EXPECT_TRUE(c.passed) << c.observed.dump();
    EXPECT_EQ(c.observed["count"], 3);
  }
}

TEST(Checks, FourRemovedBelowRangeIsReportedOnly) {
  const auto c = check_colex_max_on_t(4, 6, 4, context());
  EXPECT_TRUE(c.passed);
  EXPECT_EQ(c.expected["count"], "reported only");
  EXPECT_EQ(c.expected["relation"], "reported only");
  EXPECT_THROW(check_colex_max_on_t(3, 6, 5, context()), OutOfRange);
}

TEST(Checks, ColexGlobal) {
  const auto five3 = check_colex_global(5, 3, context());
  EXPECT_TRUE(five3.passed);
  EXPECT_EQ(five3.observed["m"], 7);
  const auto five4 = check_colex_global(5, 4, context());
  EXPECT_TRUE(five4.passed);
  EXPECT_EQ(five4.observed["m"], 6);
  const auto four3 = check_colex_global(4, 3, context());
  EXPECT_TRUE(four3.passed);
  EXPECT_NEAR(four3.observed["lambda_colex"].get<double>(), 1.0 / 27, 1e-12);
  EXPECT_THROW(check_colex_global(6, 3, context(), 5), OutOfRange);
}

TEST(Checks, SupportBound) {
  const auto sweep = check_colex_global(5, 3, context());
  const auto c = check_support_bound(sweep);
  EXPECT_TRUE(c.passed);
  EXPECT_LE(c.observed["support_size"].get<int>(), 5);
  EXPECT_GE(c.observed["m"].get<int>(), c.observed["bound"].get<int>());

  const auto k4 = check_support_bound(check_colex_global(4, 1, context()));
  EXPECT_EQ(k4.observed["support_size"], 4);
  EXPECT_EQ(k4.observed["bound"], 0);
  EXPECT_THROW(check_support_bound(CheckResult{}), OutOfRange);
}

TEST(Checks, CompleteGraph) {
  const auto c = check_complete_graph(3, 5, context());
  EXPECT_TRUE(c.passed);
  EXPECT_EQ(c.observed["grid_lower_bound_exact"], "2/25");
  const auto k4 = check_complete_graph(2, 4, context());
  EXPECT_TRUE(k4.passed);
  EXPECT_DOUBLE_EQ(k4.expected["value"].get<double>(), 0.375);
}

TEST(Checks, MotzkinStrausSmall) {
  const auto c = check_motzkin_straus(4, 20, context(), 42);
  EXPECT_TRUE(c.passed);
  EXPECT_EQ(c.observed["graphs_tested"], 7 + 20);
}

TEST(Suite, EmptyConfigPasses) {
  const auto report = run_suite(SuiteConfig{});
  EXPECT_TRUE(report.checks.empty());
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report_json(report)["passed"], true);
}

TEST(Suite, FailuresAreCapturedNotThrown) {
  SuiteConfig cfg;
  cfg.checks = {{"no-such-claim", json::object()},
                {claims::kColexPlateau, {{"r", 3}}},
                {claims::kCompleteGraph, {{"r", 2}, {"t", 3}}}};
  const auto report = run_suite(cfg);
  ASSERT_EQ(report.checks.size(), 3U);
  EXPECT_FALSE(report.passed());
  int failed = 0;
  for (const auto& c : report.checks) {
    if (!c.passed) {
      ++failed;
      EXPECT_TRUE(c.observed.contains("error"));
    }
  }
  EXPECT_EQ(failed, 2);
}

TEST(Suite, SingleFailingCheckFailsReport) {
  VerificationReport report;
  CheckResult bad;
  bad.claim_id = "synthetic";
  bad.observed = {{"value", 1}};
  bad.expected = {{"value", 2}};
  bad.passed = false;
  report.checks.push_back(bad);
  EXPECT_FALSE(report.passed());
  EXPECT_EQ(report_json(report)["passed"], false);
}

TEST(Suite, ReportSchemaAndOrdering) {
  const auto report = run_suite(small_suite());
  const auto j = report_json(report);
  for (const char* key : {"version", "seed", "checks", "passed"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["version"], kVersion);
  EXPECT_EQ(j["seed"], 42);
  ASSERT_EQ(j["checks"].size(), 5U);
  std::string prev;
  for (const auto& c : j["checks"]) {
    for (const char* key : {"claim_id", "params", "observed", "expected", "tolerance", "passed", "runtime_s"}) {
      EXPECT_TRUE(c.contains(key)) << key;
    }
    EXPECT_TRUE(c["runtime_s"].is_null());
    EXPECT_LE(prev, c["claim_id"].get<std::string>());
    prev = c["claim_id"].get<std::string>();
  }
  EXPECT_TRUE(report.passed());
  for (const auto& c : report_json(report, true)["checks"]) EXPECT_TRUE(c["runtime_s"].is_number());
}

TEST(Suite, DeterministicReport) {
  const auto a = report_json(run_suite(small_suite())).dump();
  const auto b = report_json(run_suite(small_suite())).dump();
  EXPECT_EQ(a, b);
}

TEST(Suite, CsvOneRowPerCheck) {
  const auto report = run_suite(small_suite());
  const auto csv = report_csv(report);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 6);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "claim_id,params,tolerance,passed,runtime_s");
  EXPECT_NE(csv.find("\"{\"\"k\"\":3,\"\"t\"\":5}\""), std::string::npos);
}

TEST(Suite, ConfigJsonRoundTrip) {
  const auto cfg = SuiteConfig::defaults();
  const auto back = SuiteConfig::from_json(cfg.to_json());
  EXPECT_EQ(back.to_json(), cfg.to_json());
  const auto parsed = SuiteConfig::from_json(json::parse(R"({"seed": 7, "checks": [{"claim": "complete-graph", "params": {"r": 2, "t": 3}}]})"));
  EXPECT_EQ(parsed.seed, 7U);
  ASSERT_EQ(parsed.checks.size(), 1U);
  EXPECT_EQ(parsed.checks[0].claim, "complete-graph");
}

TEST(Suite, EstimateJsonFields) {
  const auto j = estimate_to_json(solve(complete_graph(2, 3)));
  for (const char* key : {"value", "witness", "support_size", "residual", "method", "restarts_used"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["witness"].size(), 3U);
}

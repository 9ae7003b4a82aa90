#include <gtest/gtest.h>

#include "support/property.hpp"

using namespace skewring;

namespace {

SuiteReport handmade() {
  SuiteReport r{"demo", "0123456789abcdef", {}};
  r.checks.push_back({"demo.pass", 4, "associativity criterion", CheckStatus::pass, std::nullopt, "", 1.2});
  r.checks.push_back({"demo.witness", 3, "octonion nucleus", CheckStatus::witness, "(X, e1, e2) = [0,0,0,2]X", "", 0});
  r.checks.push_back({"demo.fail", 0, "axioms", CheckStatus::fail, std::nullopt, "a | b", 3.7});
  return r;
}

}  // namespace

TEST(Report, JsonFieldsAndCounts) {
  json j = json::parse(emit_report(handmade(), ReportFormat::json));
  EXPECT_EQ(j["suite"], "demo");
  EXPECT_EQ(j["config_digest"], "0123456789abcdef");
  EXPECT_EQ(j["passed"], 2);
  EXPECT_EQ(j["failed"], 1);
  ASSERT_EQ(j["checks"].size(), 3u);
  EXPECT_EQ(j["checks"][0]["status"], "pass");
  EXPECT_EQ(j["checks"][0]["elapsed_ms"], 1);
  EXPECT_EQ(j["checks"][1]["witness"], "(X, e1, e2) = [0,0,0,2]X");
  EXPECT_FALSE(j["checks"][0].contains("witness"));
  EXPECT_EQ(j["checks"][2]["detail"], "a | b");
  std::vector<std::string> keys;
  for (auto it = j["checks"][1].begin(); it != j["checks"][1].end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"id", "criterion", "anchor", "status", "witness", "elapsed_ms"}));
}

TEST(Report, TimingCanBeOmitted) {
  json j = json::parse(emit_report(handmade(), ReportFormat::json, false));
  for (const auto& c : j["checks"]) EXPECT_FALSE(c.contains("elapsed_ms"));
}

TEST(Report, Markdown) {
  const std::string md = emit_report(handmade(), ReportFormat::markdown);
  EXPECT_EQ(md.rfind("# Suite `demo`\n", 0), 0u);
  EXPECT_NE(md.find("config digest: `0123456789abcdef`"), std::string::npos);
  EXPECT_NE(md.find("result: FAIL (2/3 checks)"), std::string::npos);
  EXPECT_NE(md.find("| demo.fail | - | axioms | fail | a / b | 4 |"), std::string::npos);
  EXPECT_EQ(emit_report(handmade(), ReportFormat::markdown, false).find(" ms |"), std::string::npos);
}

TEST(Suites, NamesAndUnknownSuite) {
  const auto& names = suite_names();
  EXPECT_EQ(names.size(), 11u);
  EXPECT_EQ(names.back(), "all");
  try {
    run_suite("nonsense");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unknown_suite);
  }
}

TEST(Suites, JordanSuitePassesAndIsDeterministic) {
  SuiteReport a = run_suite("jordan", {}, {}, 1);
  SuiteReport b = run_suite("jordan", {}, {}, 3);
  EXPECT_TRUE(a.ok());
  EXPECT_FALSE(a.checks.empty());
  for (const auto& c : a.checks) EXPECT_EQ(c.criterion, 9) << c.id;
  EXPECT_EQ(emit_report(a, ReportFormat::json, false), emit_report(b, ReportFormat::json, false));
  EXPECT_EQ(a.config_digest, b.config_digest);
}

TEST(Suites, ConfigScopeReplacesBuiltInRings) {
  SuiteScope scope{{"config", skew_ring(diag_swap(matrix_algebra(rationals(), 2)), Shape::laurent)}};
  auto scoped = suites::checks_for("nuclei", scope);
  ASSERT_FALSE(scoped.empty());
  for (const auto& c : scoped) EXPECT_NE(c.id.find(".config."), std::string::npos) << c.id;
  EXPECT_TRUE(run_suite("nuclei", scope).ok());
}

TEST(Suites, ThrowingCheckIsRecordedAsFailure) {
  CheckSpec spec{"boom", 0, "none", []() -> Outcome { throw Error(Errc::cannot_decide, "cannot decide"); }};
  CheckRecord r = suites::run_check(spec);
  EXPECT_EQ(r.status, CheckStatus::fail);
  EXPECT_EQ(r.detail, "error: cannot decide");
}

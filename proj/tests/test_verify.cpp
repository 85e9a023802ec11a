#include <gtest/gtest.h>

#include "heckelab/errors.hpp"
#include "heckelab/verify.hpp"

using namespace heckelab;

namespace {

SuiteRanges small() {
  SuiteRanges r;
  r.k_max = 3;
  r.r_max = 2;
  r.q_max = 2;
  r.eval_n_max = 5;
  r.eval_trials = 5;
  r.tensor_trials = 5;
  return r;
}

TEST(Verify, UnknownSuiteThrows) { EXPECT_THROW(run_suite("bogus", small(), 1), DomainError); }

TEST(Verify, SuiteNamesEndWithAll) {
  ASSERT_FALSE(suite_names().empty());
  EXPECT_EQ(suite_names().back(), "all");
}

TEST(Verify, EverySuitePassesOnSmallRanges) {
  for (const std::string& name : suite_names()) {
    if (name == "all") continue;
    const SuiteReport rep = run_suite(name, small(), 3);
    EXPECT_TRUE(rep.passed()) << name;
    EXPECT_GT(rep.checks.size(), 0u) << name;
    for (const CheckResult& c : rep.checks) EXPECT_EQ(c.id.rfind(name + ".", 0), 0u) << c.id;
  }
}

TEST(Verify, SameSeedSameReport) {
  SuiteReport a = run_suite("evalprops", small(), 99);
  SuiteReport b = run_suite("evalprops", small(), 99);
  a.elapsed_ms = b.elapsed_ms = 0;
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
}

TEST(Verify, FilterKeepsPrefixes) {
  const SuiteReport rep = run_suite("qidentities", small(), 1, {"qidentities.dnumber."});
  ASSERT_FALSE(rep.checks.empty());
  for (const CheckResult& c : rep.checks) EXPECT_EQ(c.id.rfind("qidentities.dnumber.", 0), 0u);
}

TEST(Verify, BudgetBecomesSkip) {
  SuiteRanges r = small();
  r.q_max = 4;
  const SuiteReport rep = run_suite("lattice", r, 1, {"lattice.window"});
  EXPECT_EQ(rep.count(CheckStatus::skipped), 2u);
  EXPECT_TRUE(rep.passed());
}

TEST(Verify, JsonShape) {
  const auto j = to_json(run_suite("chow", small(), 5, {"chow.bridge"}));
  EXPECT_EQ(j["suite"], "chow");
  EXPECT_EQ(j["seed"], 5);
  EXPECT_EQ(j["overall"], "pass");
  ASSERT_TRUE(j["checks"].is_array());
  const auto& first = j["checks"][0];
  for (const char* key : {"id", "params", "status", "witness"}) EXPECT_TRUE(first.contains(key)) << key;
  EXPECT_TRUE(j.contains("elapsed_ms"));
}

}  // namespace

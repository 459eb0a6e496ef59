#include <gtest/gtest.h>

#include <algorithm>

#include "logmmp/hilbert.hpp"
#include "logmmp/verify.hpp"

TEST(Verify, DefaultRunPasses) {
  const auto report = logmmp::run_verification();
  EXPECT_TRUE(report.passed());
  EXPECT_GE(report.checks.size(), 8u);
  for (const auto& c : report.checks) {
    EXPECT_TRUE(c.passed) << c.name << ": " << c.failure;
    EXPECT_GT(c.cases, 0) << c.name;
  }
}

TEST(Verify, PerturbedTailConstantIsCaught) {
  logmmp::VerifyOptions options;
  options.tail_weight = [](int b, const logmmp::Rat& m) {
    return logmmp::tail_weight_closed_form(b, m) + logmmp::Rat(1);
  };
  const auto report = logmmp::run_verification(options);
  EXPECT_FALSE(report.passed());
  const auto it = std::find_if(report.checks.begin(), report.checks.end(),
                               [](const auto& c) { return c.name == "tail_weight_closed_form"; });
  ASSERT_NE(it, report.checks.end());
  EXPECT_FALSE(it->passed);
  EXPECT_FALSE(it->failure.empty());
  const auto bridge = std::find_if(report.checks.begin(), report.checks.end(),
                                   [](const auto& c) { return c.name == "bridge_weight_closed_form"; });
  ASSERT_NE(bridge, report.checks.end());
  EXPECT_TRUE(bridge->passed);
}

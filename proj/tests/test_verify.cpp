#include <gtest/gtest.h>

#include "countforge/error.hpp"
#include "countforge/verify.hpp"

using namespace countforge;
using namespace countforge::verify;

TEST(Rng, Deterministic) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  Rng c(42);
  for (int i = 0; i < 1000; ++i) {
    const auto v = c.uniform(-3, 3);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 3);
  }
}

TEST(Rng, SplitMixReferenceValue) {
  // First output of splitmix64 seeded with 0.
  Rng r(0);
  EXPECT_EQ(r.next(), 0xE220A8397B1DCDAFULL);
}

TEST(Suites, RegisteredAndDeterministic) {
  const auto& names = suite_names();
  EXPECT_GE(names.size(), 20u);
  EXPECT_NE(std::find(names.begin(), names.end(), "perm-endtoend"), names.end());
  const Report r = verify_suite("perm-endtoend", 7);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.trials, 0u);
  const auto a = to_json({verify_suite("theta-identity", 3)});
  const auto b = to_json({verify_suite("theta-identity", 3)});
  EXPECT_EQ(a, b);
  EXPECT_THROW(verify_suite("no-such-suite", 1), InvalidArgument);
}

TEST(Suites, LimitsShrinkWork) {
  const Report small = verify_suite("z-proxy", 1, Limits{5, 3, 3});
  EXPECT_EQ(small.trials, 5u);
  EXPECT_TRUE(small.passed());
}

TEST(Report, JsonShape) {
  Report r;
  r.suite = "x";
  r.seed = 9;
  r.trials = 2;
  r.failures.push_back({"case", "1/2", "1"});
  r.elapsed_seconds = 0.5;
  const std::string plain = to_json({r});
  EXPECT_EQ(plain.find("elapsed"), std::string::npos);
  EXPECT_NE(plain.find("\"passed\": false"), std::string::npos);
  EXPECT_NE(to_json({r}, true).find("elapsed_seconds"), std::string::npos);
}

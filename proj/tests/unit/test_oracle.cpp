#include <gtest/gtest.h>

#include <cstdlib>

#include "skewmorph/error.hpp"
#include "skewmorph/oracle.hpp"
#include "test_support.hpp"

using namespace skewmorph;

namespace {

std::vector<std::vector<int>> image_lists(const std::vector<SkewMorphism>& list) {
  std::vector<std::vector<int>> out;
  for (const SkewMorphism& phi : list) out.emplace_back(phi.images().begin(), phi.images().end());
  return out;
}

}  // namespace

TEST(Oracle, SmallExamples) {
  const auto z5 = oracle::enumerate_all(5);
  ASSERT_EQ(z5.size(), 4u);
  for (const SkewMorphism& phi : z5) EXPECT_TRUE(phi.is_automorphism());
  const auto z4 = oracle::enumerate_all(4);
  ASSERT_EQ(z4.size(), 2u);
  for (const SkewMorphism& phi : z4) EXPECT_TRUE(phi.is_automorphism());
  EXPECT_EQ(image_lists(oracle::enumerate_all(6)),
            (std::vector<std::vector<int>>{
                {0, 1, 2, 3, 4, 5}, {0, 3, 2, 5, 4, 1}, {0, 5, 2, 1, 4, 3}, {0, 5, 4, 3, 2, 1}}));
  EXPECT_EQ(oracle::enumerate_all(1).size(), 1u);
}

TEST(Oracle, IsSkew) {
  EXPECT_TRUE(oracle::is_skew(6, std::vector<int>{0, 3, 2, 5, 4, 1}));
  EXPECT_TRUE(oracle::is_skew(6, std::vector<int>{0, 1, 2, 3, 4, 5}));
  EXPECT_FALSE(oracle::is_skew(6, std::vector<int>{0, 2, 4, 1, 3, 5}));
  EXPECT_FALSE(oracle::is_skew(3, std::vector<int>{0, 1, 1}));
  EXPECT_FALSE(oracle::is_skew(3, std::vector<int>{1, 0, 2}));
}

// The search agrees with the definition applied to every permutation.
TEST(Oracle, MatchesDefinitionBruteForce) {
  for (int n = 1; n <= 9; ++n)
    EXPECT_EQ(image_lists(oracle::enumerate_all(n)), testsupport::brute_force_all(n)) << n;
}

// Counts from the exhaustive search, frozen.
TEST(Oracle, FrozenCounts) {
  const std::vector<std::size_t> counts{1, 1, 2, 2, 4, 4, 6, 6, 10, 8, 10, 8};
  for (int n = 1; n <= 12; ++n)
    EXPECT_EQ(oracle::enumerate_all(n).size(), counts[static_cast<std::size_t>(n - 1)]) << n;
}

TEST(Oracle, ThreadsGiveSameResult) {
  oracle::Options options;
  options.threads = 3;
  EXPECT_EQ(oracle::enumerate_all(12, options), oracle::enumerate_all(12));
}

TEST(Oracle, LimitAndBudget) {
  try {
    oracle::enumerate_all(oracle::default_limit() + 1);
    FAIL() << "expected OracleLimit";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOracleLimit);
  }
  oracle::Options small;
  small.limit = 6;
  EXPECT_THROW(oracle::enumerate_all(7, small), Error);
  EXPECT_EQ(oracle::enumerate_all(6, small).size(), 4u);

  oracle::Options budget;
  budget.budget = 5;
  try {
    oracle::enumerate_all(10, budget);
    FAIL() << "expected BudgetExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
  oracle::enumerate_all(8);
  EXPECT_GT(oracle::last_node_count(), 0u);
}

TEST(Oracle, LimitFromEnvironment) {
  ::setenv("SKEWMORPH_ORACLE_LIMIT", "9", 1);
  EXPECT_EQ(oracle::default_limit(), 9);
  ::unsetenv("SKEWMORPH_ORACLE_LIMIT");
  EXPECT_EQ(oracle::default_limit(), oracle::kDefaultLimit);
}

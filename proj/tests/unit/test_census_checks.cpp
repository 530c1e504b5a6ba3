#include <gtest/gtest.h>

#include "skewmorph/census.hpp"
#include "skewmorph/census_checks.hpp"
#include "skewmorph/error.hpp"

using namespace skewmorph;

namespace {

const Census& census60() {
  static const Census c = Census::generate(60);
  return c;
}

}  // namespace

TEST(CensusChecks, VerifyAgainstOracle) {
  const VerifyReport r6 = verify(census60(), 6);
  EXPECT_TRUE(r6.equal());
  EXPECT_EQ(r6.census_count, 4u);
  EXPECT_EQ(r6.oracle_count, 4u);
  EXPECT_TRUE(verify(census60(), 4).equal());
  EXPECT_EQ(verify(census60(), 4).census_count, 2u);
  EXPECT_TRUE(verify(census60(), 9).equal());
  for (int c : comp_set(census60(), 9)) EXPECT_NE(c, 2);
}

TEST(CensusChecks, VerifyReportsDifferences) {
  std::vector<std::vector<SkewMorphism>> lists;
  for (int n = 1; n <= 6; ++n) lists.push_back(census60().morphisms(n));
  lists[5].erase(lists[5].begin() + 1);  // drop a proper morphism of Z_6
  const Census partial = Census::from_lists(lists);
  const VerifyReport r = verify(partial, 6);
  EXPECT_FALSE(r.equal());
  ASSERT_EQ(r.missing.size(), 1u);
  EXPECT_EQ(r.missing.front().to_string(), "0,3,2,5,4,1");
  EXPECT_TRUE(r.extra.empty());
}

TEST(CensusChecks, PrimeOrderCounts) {
  EXPECT_EQ(predicted_prime_order_count(3, 6), 2);
  EXPECT_EQ(predicted_prime_order_count(5, 20), 12);
  EXPECT_EQ(predicted_prime_order_count(3, 7), 0);
  EXPECT_EQ(predicted_prime_order_count(5, 15), 0);
  const CountCheck a = check_prime_order_count(census60(), 3, 6);
  EXPECT_EQ(a.observed, 2);
  EXPECT_TRUE(a.matches());
  const CountCheck b = check_prime_order_count(census60(), 5, 20);
  EXPECT_EQ(b.observed, 12);
  EXPECT_EQ(b.predicted, 12);
  const CountCheck c = check_prime_order_count(census60(), 3, 7);
  EXPECT_EQ(c.observed, 0);
  EXPECT_TRUE(c.matches());
}

TEST(CensusChecks, Order4Count) {
  const std::vector<int> three{3};
  const CountCheck r = check_order4_count(census60(), three);
  EXPECT_EQ(r.observed, 8);
  EXPECT_EQ(r.predicted, 8);
  const std::vector<int> none;
  const std::vector<int> twice{3, 3};
  const std::vector<int> even{2};
  const std::vector<int> two_primes{3, 5};
  for (const auto* bad : {&none, &twice, &even}) {
    try {
      check_order4_count(census60(), *bad);
      ADD_FAILURE() << "expected BadParameters";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kBadParameters);
    }
  }
  try {
    check_order4_count(census60(), two_primes);
    FAIL() << "expected IncompleteCensus";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIncompleteCensus);
  }
}

TEST(CensusChecks, ComplexitySets) {
  EXPECT_EQ(comp_set(census60(), 9), (std::set<int>{0, 1, 3}));
  EXPECT_EQ(comp_set(census60(), 25), (std::set<int>{0, 1, 3}));
  EXPECT_EQ(comp_set(census60(), 49), (std::set<int>{0, 1, 3}));
  EXPECT_EQ(comp_set(census60(), 5), (std::set<int>{0, 1}));
  EXPECT_EQ(comp_set(census60(), 1), (std::set<int>{0}));
  EXPECT_EQ(max_complexity(census60(), 27), 5);
}

TEST(CensusChecks, StructureCriteria) {
  const StructureReport r4 = check_structure_criteria(census60(), 4);
  EXPECT_FALSE(r4.has_proper);
  EXPECT_FALSE(r4.expect_proper);
  const StructureReport r20 = check_structure_criteria(census60(), 20);
  EXPECT_TRUE(r20.all_at_most_two);
  EXPECT_TRUE(r20.expect_at_most_two);
  const StructureReport r9 = check_structure_criteria(census60(), 9);
  EXPECT_FALSE(r9.all_at_most_two);
  EXPECT_FALSE(r9.expect_at_most_two);
  const StructureReport r27 = check_structure_criteria(census60(), 27);
  EXPECT_TRUE(r27.odd_cube);
  EXPECT_TRUE(r27.has_four_or_more);
  for (int n = 1; n <= 60; ++n) EXPECT_TRUE(check_structure_criteria(census60(), n).ok()) << n;
}

TEST(CensusChecks, DerivedClosure) {
  const Census& c = census60();
  EXPECT_EQ(smallest_host(c, SkewMorphism::from_automorphism(3, 2)), std::optional<int>(6));
  for (int m = 1; m <= 10; ++m) EXPECT_TRUE(smallest_host(c, SkewMorphism::identity(m)).has_value());
  EXPECT_EQ(smallest_host(c, SkewMorphism::from_automorphism(5, 2)), std::optional<int>(20));
  const auto rows = derived_closure(c, 6);
  std::size_t expected_rows = 0;
  for (int k = 1; k <= 6; ++k) expected_rows += c.stratum(k).size();
  EXPECT_EQ(rows.size(), expected_rows);
  for (const ClosureRow& row : rows) {
    EXPECT_EQ(row.host, smallest_host(c, row.rho));
  }
}

TEST(CensusChecks, Stats) {
  const auto rows = stats(census60());
  ASSERT_EQ(rows.size(), 60u);
  EXPECT_EQ(rows[0].total, 1u);
  EXPECT_EQ(rows[5].total, 4u);
  EXPECT_EQ(rows[5].proper, 2u);
  EXPECT_EQ(rows[5].max_complexity, 2);
  EXPECT_EQ(rows[8].automorphisms, 6u);
  EXPECT_EQ(rows[8].total, 10u);
  EXPECT_EQ(rows[8].max_complexity, 3);
  EXPECT_EQ(rows[5].by_order.at(3), 2u);
  const std::string csv = stats_csv(std::span(rows).first(3));
  EXPECT_EQ(csv, "n,total,automorphisms,proper,max_complexity\n1,1,1,0,0\n2,1,1,0,0\n3,2,2,0,1\n");
  EXPECT_NE(stats_table(rows).find("max_complexity"), std::string::npos);
}

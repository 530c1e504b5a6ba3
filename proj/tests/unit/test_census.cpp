#include <gtest/gtest.h>

#include "skewmorph/census.hpp"
#include "skewmorph/construct.hpp"
#include "skewmorph/error.hpp"
#include "skewmorph/numth.hpp"
#include "skewmorph/oracle.hpp"
#include "skewmorph/reduce.hpp"

using namespace skewmorph;

namespace {

const Census& census60() {
  static const Census c = Census::generate(60);
  return c;
}

std::size_t accepted_count(const std::vector<ReductionTriple>& triples) {
  std::size_t count = 0;
  for (const ReductionTriple& t : triples) count += build(t).accepted();
  return count;
}

}  // namespace

TEST(Census, SmallStrata) {
  const Census c = Census::generate(5);
  EXPECT_EQ(c.max_n(), 5);
  const std::vector<std::size_t> sizes{1, 1, 2, 2, 4};
  for (int n = 1; n <= 5; ++n) {
    EXPECT_TRUE(c.covers(n));
    EXPECT_EQ(c.stratum(n).size(), sizes[static_cast<std::size_t>(n - 1)]);
  }
  EXPECT_FALSE(c.covers(6));
  try {
    c.stratum(6);
    FAIL() << "expected IncompleteCensus";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIncompleteCensus);
  }
}

TEST(Census, Z6HasTwoProper) {
  const Census c = Census::generate(6);
  int proper = 0;
  for (const CensusEntry& e : c.stratum(6).entries()) proper += e.complexity >= 2;
  EXPECT_EQ(proper, 2);
}

TEST(Census, MatchesOracle) {
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(census60().morphisms(n), oracle::enumerate_all(n)) << n;
}

// Totals per modulus, frozen after cross-checking n <= 14 against the oracle.
TEST(Census, FrozenTotals) {
  const std::vector<std::size_t> totals{
      1,  1,  2,  2,  4,  4,  6,  6,  10, 8,  10, 8,  12, 12, 8,  20, 16, 30, 18, 24,
      24, 20, 22, 24, 68, 24, 82, 24, 28, 32, 30, 76, 20, 32, 24, 60, 36, 36, 48, 60,
      40, 64, 42, 40, 40, 44, 46, 80, 222, 172, 32, 72, 52, 264, 80, 72, 72, 56, 58, 96};
  for (int n = 1; n <= 60; ++n)
    EXPECT_EQ(census60().stratum(n).size(), totals[static_cast<std::size_t>(n - 1)]) << n;
}

TEST(Census, EntryData) {
  for (int n = 1; n <= 60; ++n) {
    const Stratum& s = census60().stratum(n);
    for (std::size_t i = 0; i < s.size(); ++i) {
      const CensusEntry& e = s[i];
      SCOPED_TRACE(e.phi.to_string());
      if (i > 0) EXPECT_LT(s[i - 1].phi, e.phi);
      EXPECT_EQ(s.find(e.phi.images()), std::optional<int>(static_cast<int>(i)));
      const ComplexityProfile p = complexity(e.phi);
      EXPECT_EQ(e.complexity, p.complexity);
      EXPECT_EQ(e.auto_order, p.auto_order);
      EXPECT_EQ(e.kernel_size, e.phi.kernel().size);
      EXPECT_EQ(census60().stratum(e.phi.order())[static_cast<std::size_t>(e.derived_index)].phi,
                derived(e.phi));
      if (e.complexity >= 2 && e.complexity % 2 == 0) {
        const int m = e.auto_order;
        ASSERT_GE(e.restrict_index, 0);
        EXPECT_EQ(census60().stratum(n / m)[static_cast<std::size_t>(e.restrict_index)].phi,
                  restrict_to_subgroup(e.phi, m));
      } else {
        EXPECT_EQ(e.restrict_index, -1);
      }
    }
  }
}

TEST(Census, ThreadsAndValidationAgree) {
  GenerateOptions options;
  options.threads = 3;
  options.validate_results = true;
  std::vector<int> progress;
  options.progress = [&](int n, std::size_t) { progress.push_back(n); };
  const Census c = Census::generate(60, options);
  EXPECT_EQ(c, census60());
  ASSERT_EQ(progress.size(), 60u);
  EXPECT_EQ(progress.back(), 60);
}

TEST(Census, FromLists) {
  std::vector<std::vector<SkewMorphism>> lists;
  for (int n = 1; n <= 12; ++n) lists.push_back(oracle::enumerate_all(n));
  const Census c = Census::from_lists(lists);
  EXPECT_EQ(c, Census::generate(12));

  auto duplicated = lists;
  duplicated[5].push_back(duplicated[5].front());
  EXPECT_THROW(Census::from_lists(duplicated), Error);

  auto missing = lists;
  missing[2].pop_back();  // drops a derived target of higher strata
  try {
    Census::from_lists(missing);
    FAIL() << "expected FormatError";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFormatError);
  }
}

TEST(Census, CandidateStreams) {
  const Census& c = census60();
  EXPECT_TRUE(candidates_odd(c, 6, 3).empty());
  // The proper skew morphisms of Z_9 all have order 6.
  EXPECT_EQ(accepted_count(candidates_odd(c, 9, 3)), 0u);
  EXPECT_EQ(accepted_count(candidates_odd(c, 9, 6)), 4u);
  EXPECT_EQ(accepted_count(candidates_even(c, 9, 6)), 0u);

  std::vector<int> hs;
  for (const ReductionTriple& t : candidates_even(c, 6, 3)) {
    if (build(t).accepted()) hs.push_back(t.h);
  }
  EXPECT_EQ(hs, (std::vector<int>{3, 5}));
  EXPECT_TRUE(candidates_even(c, 6, 5).empty());
  EXPECT_TRUE(candidates_odd(c, 6, 5).empty());
  // 7 does not divide 10 * totient(10).
  EXPECT_TRUE(candidates_even(c, 10, 7).empty());
  EXPECT_TRUE(candidates_odd(c, 10, 7).empty());

  const std::size_t order4 = accepted_count(candidates_even(c, 48, 4)) +
                             accepted_count(candidates_odd(c, 48, 4));
  EXPECT_EQ(order4, 8u);
}

// E2 and the congruence on h are implied by the remaining conditions.
TEST(Census, RelaxedFiltersAddNoMorphisms) {
  const Census& c = census60();
  CandidateFilter relaxed;
  relaxed.require_e2 = false;
  relaxed.restrict_h = false;
  for (int n = 6; n <= 16; ++n) {
    std::vector<SkewMorphism> strict, loose;
    for (int ell = 3; ell < n; ++ell) {
      if ((n * numth::totient(n)) % ell != 0) continue;
      for (const auto& t : candidates_odd(c, n, ell))
        if (auto r = build(t); r.accepted()) strict.push_back(*r.result);
      for (const auto& t : candidates_even(c, n, ell))
        if (auto r = build(t); r.accepted()) strict.push_back(*r.result);
      BuildOptions raw;
      raw.check_preconditions = false;
      for (const auto& t : candidates_odd(c, n, ell, relaxed))
        if (auto r = build(t, raw); r.accepted()) loose.push_back(*r.result);
      for (const auto& t : candidates_even(c, n, ell, relaxed))
        if (auto r = build(t, raw); r.accepted()) loose.push_back(*r.result);
    }
    std::sort(strict.begin(), strict.end());
    std::sort(loose.begin(), loose.end());
    loose.erase(std::unique(loose.begin(), loose.end()), loose.end());
    EXPECT_EQ(strict, loose) << n;
  }
}

// Without O2 some odd triples pass O1 and O3 but do not give skew morphisms;
// building them without the precondition check reports that.
TEST(Census, DroppingO2IsDetected) {
  const Census& c = census60();
  CandidateFilter no_o2;
  no_o2.require_o2 = false;
  BuildOptions raw;
  raw.check_preconditions = false;
  std::size_t caught = 0;
  for (const ReductionTriple& t : candidates_odd(c, 16, 8, no_o2)) {
    EXPECT_EQ(odd_compatible(t.alpha, t.beta, t.auto_order),
              [&] {
                try {
                  check_odd_preconditions(t);
                  return true;
                } catch (const Error&) {
                  return false;
                }
              }());
    try {
      const CandidateReport r = build(t, raw);
      if (r.accepted()) EXPECT_TRUE(c.stratum(16).find(r.result->images()).has_value());
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kPreconditionViolated);
      EXPECT_FALSE(odd_compatible(t.alpha, t.beta, t.auto_order));
      ++caught;
    }
  }
  EXPECT_GT(caught, 0u);
}

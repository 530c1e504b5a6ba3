#include <gtest/gtest.h>

#include "skewmorph/error.hpp"
#include "skewmorph/numth.hpp"

namespace nt = skewmorph::numth;
using skewmorph::Error;
using skewmorph::ErrorCode;

TEST(Numth, GcdAndLcm) {
  EXPECT_EQ(nt::gcd(12, 18), 6);
  EXPECT_EQ(nt::gcd(0, 7), 7);
  EXPECT_EQ(nt::gcd(-4, 6), 2);
  EXPECT_EQ(nt::lcm(4, 6), 12);
  EXPECT_EQ(nt::lcm(1, 9), 9);
}

TEST(Numth, Totient) {
  EXPECT_EQ(nt::totient(1), 1);
  EXPECT_EQ(nt::totient(6), 2);
  EXPECT_EQ(nt::totient(48), 16);
  EXPECT_EQ(nt::totient(97), 96);
  for (int n = 1; n <= 200; ++n) {
    int count = 0;
    for (int a = 1; a <= n; ++a) count += nt::gcd(a, n) == 1;
    EXPECT_EQ(nt::totient(n), count) << n;
  }
}

TEST(Numth, Divisors) {
  EXPECT_EQ(nt::divisors(1), (std::vector<std::int64_t>{1}));
  EXPECT_EQ(nt::divisors(12), (std::vector<std::int64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(nt::divisors(9), (std::vector<std::int64_t>{1, 3, 9}));
}

TEST(Numth, Units) {
  EXPECT_EQ(nt::units(6), (std::vector<std::int64_t>{1, 5}));
  EXPECT_EQ(nt::units(5), (std::vector<std::int64_t>{1, 2, 3, 4}));
  EXPECT_EQ(nt::units(1), (std::vector<std::int64_t>{1}));
}

TEST(Numth, PrimesAndFactors) {
  EXPECT_FALSE(nt::is_prime(1));
  EXPECT_TRUE(nt::is_prime(2));
  EXPECT_TRUE(nt::is_prime(199));
  EXPECT_FALSE(nt::is_prime(91));
  EXPECT_EQ(nt::prime_factors(360), (std::vector<std::int64_t>{2, 3, 5}));
  EXPECT_TRUE(nt::is_square_free(30));
  EXPECT_FALSE(nt::is_square_free(18));
  EXPECT_TRUE(nt::is_square_free(1));
}

TEST(Numth, MultiplicativeOrder) {
  EXPECT_EQ(nt::multiplicative_order(2, 5), 4);
  EXPECT_EQ(nt::multiplicative_order(1, 7), 1);
  EXPECT_EQ(nt::multiplicative_order(4, 9), 3);
  try {
    nt::multiplicative_order(3, 9);
    FAIL() << "expected NotAUnit";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAUnit);
  }
}

TEST(Numth, ElementOfUnitOrder) {
  EXPECT_EQ(nt::element_of_unit_order(3, 1, 2), 2);
  EXPECT_EQ(nt::element_of_unit_order(3, 2, 2), 8);
  const std::int64_t t = nt::element_of_unit_order(5, 2, 4);
  EXPECT_EQ(nt::pow_mod(t, 4, 25), 1);
  EXPECT_NE(nt::pow_mod(t, 2, 25), 1);
  EXPECT_EQ(nt::multiplicative_order(t, 25), 4);
  try {
    nt::element_of_unit_order(5, 2, 3);
    FAIL() << "expected NoSuchElement";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoSuchElement);
  }
}

TEST(Numth, PowAndMod) {
  EXPECT_EQ(nt::mod(-1, 6), 5);
  EXPECT_EQ(nt::pow_mod(3, 0, 7), 1);
  EXPECT_EQ(nt::pow_mod(3, 6, 7), 1);
  EXPECT_EQ(nt::ipow(3, 4), 81);
}

#pragma once

#include <cstdint>
#include <vector>

// Small-integer number theory. Everything here is trial-division scale and
// works in 64-bit arithmetic.
namespace skewmorph::numth {

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

/// Euler's totient.
std::int64_t totient(std::int64_t n);

/// Divisors of n, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Units modulo n in {1,...,n}; for n = 1 this is [1].
std::vector<std::int64_t> units(std::int64_t n);

bool is_prime(std::int64_t n);

/// Distinct prime factors of n, ascending.
std::vector<std::int64_t> prime_factors(std::int64_t n);

bool is_square_free(std::int64_t n);

/// Reduces a into {0,...,n-1}.
inline std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t n);

/// Smallest k >= 1 with u^k = 1 (mod n). Throws Error(kNotAUnit) if gcd(u, n) != 1.
std::int64_t multiplicative_order(std::int64_t u, std::int64_t n);

/// Smallest unit t modulo p^e whose multiplicative order is exactly d.
/// Throws Error(kNoSuchElement) when d does not divide p^(e-1)(p-1).
std::int64_t element_of_unit_order(std::int64_t p, int e, std::int64_t d);

std::int64_t ipow(std::int64_t base, int exp);

}  // namespace skewmorph::numth

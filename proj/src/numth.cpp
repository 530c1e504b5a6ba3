#include "skewmorph/numth.hpp"

#include <numeric>
#include <string>

#include "skewmorph/error.hpp"

namespace skewmorph {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotAUnit: return "NotAUnit";
    case ErrorCode::kNoSuchElement: return "NoSuchElement";
    case ErrorCode::kNotAPermutation: return "NotAPermutation";
    case ErrorCode::kIdentityNotFixed: return "IdentityNotFixed";
    case ErrorCode::kNotSkew: return "NotSkew";
    case ErrorCode::kNotCompatible: return "NotCompatible";
    case ErrorCode::kNotPreserved: return "NotPreserved";
    case ErrorCode::kNotSkewPower: return "NotSkewPower";
    case ErrorCode::kNotProper: return "NotProper";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kBadParameters: return "BadParameters";
    case ErrorCode::kConditionViolated: return "ConditionViolated";
    case ErrorCode::kIncompleteCensus: return "IncompleteCensus";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kOracleLimit: return "OracleLimit";
    case ErrorCode::kIoFailure: return "IoFailure";
    case ErrorCode::kFormatError: return "FormatError";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

namespace numth {

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t totient(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> low, high;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::vector<std::int64_t> units(std::int64_t n) {
  if (n == 1) return {1};
  std::vector<std::int64_t> out;
  for (std::int64_t u = 1; u < n; ++u)
    if (std::gcd(u, n) == 1) out.push_back(u);
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_square_free(std::int64_t n) {
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t n) {
  std::int64_t result = 1 % n;
  base = mod(base, n);
  while (exp > 0) {
    if (exp & 1) result = result * base % n;
    base = base * base % n;
    exp >>= 1;
  }
  return result;
}

std::int64_t multiplicative_order(std::int64_t u, std::int64_t n) {
  if (n < 1 || std::gcd(mod(u, n), n) != 1)
    throw Error(ErrorCode::kNotAUnit,
                std::to_string(u) + " is not a unit modulo " + std::to_string(n));
  // The order divides phi(n); test divisors in ascending order.
  for (std::int64_t d : divisors(totient(n)))
    if (pow_mod(u, d, n) == 1 % n) return d;
  throw Error(ErrorCode::kInternal, "no order found");
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::int64_t element_of_unit_order(std::int64_t p, int e, std::int64_t d) {
  if (!is_prime(p) || e < 1 || d < 1)
    throw Error(ErrorCode::kNoSuchElement, "needs a prime p, e >= 1 and d >= 1");
  const std::int64_t modulus = ipow(p, e);
  const std::int64_t group_order = ipow(p, e - 1) * (p - 1);
  if (group_order % d != 0)
    throw Error(ErrorCode::kNoSuchElement,
                std::to_string(d) + " does not divide " + std::to_string(group_order));
  for (std::int64_t t = 1; t < modulus || modulus == 1; ++t) {
    if (t % p == 0) continue;
    if (multiplicative_order(t, modulus) == d) return t;
    if (modulus == 1) break;
  }
  throw Error(ErrorCode::kNoSuchElement, "no unit of the requested order");
}

}  // namespace numth
}  // namespace skewmorph

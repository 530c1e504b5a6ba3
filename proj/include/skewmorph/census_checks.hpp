#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "skewmorph/census.hpp"
#include "skewmorph/oracle.hpp"

namespace skewmorph {

struct VerifyReport {
  int n = 0;
  std::size_t census_count = 0;
  std::size_t oracle_count = 0;
  std::vector<SkewMorphism> missing{};  // found by the oracle only
  std::vector<SkewMorphism> extra{};    // in the census only

  bool equal() const { return missing.empty() && extra.empty(); }
};

/// Compares the stratum of Z_n with an exhaustive search.
VerifyReport verify(const Census& census, int n, const oracle::Options& options = {});

struct CountCheck {
  std::int64_t observed = 0;
  std::int64_t predicted = 0;

  bool matches() const { return observed == predicted; }
};

/// (sum of totient(k) over k | p-1, k | n, k != 1) * (p-1) if p | n, else 0.
std::int64_t predicted_prime_order_count(int p, int n);

/// Proper skew morphisms of Z_n of prime order p versus the closed formula.
CountCheck check_prime_order_count(const Census& census, int p, int n);

/// Proper skew morphisms of order 4 of Z_n, n = 16 p_1 ... p_i, versus 2^(i+2).
/// Throws Error(kBadParameters) unless `primes` is a non-empty list of
/// distinct odd primes.
CountCheck check_order4_count(const Census& census, std::span<const int> primes);

/// Complexities occurring among the skew morphisms of Z_n.
std::set<int> comp_set(const Census& census, int n);

int max_complexity(const Census& census, int n);

struct StructureReport {
  int n = 0;
  bool has_proper = false;
  /// Proper skew morphisms are expected unless n = 4 or gcd(n, totient(n)) = 1.
  bool expect_proper = false;
  bool all_at_most_two = false;
  /// n = 2^e m with e <= 4 and m odd and square-free.
  bool expect_at_most_two = false;
  /// n divisible by p^3 for some odd prime p.
  bool odd_cube = false;
  /// Some complexity is at least 4.
  bool has_four_or_more = false;

  /// An odd cube divisor forces a complexity of at least 4; the converse is
  /// not expected.
  bool ok() const {
    return has_proper == expect_proper && all_at_most_two == expect_at_most_two &&
           (!odd_cube || has_four_or_more);
  }
};

StructureReport check_structure_criteria(const Census& census, int n);

struct ClosureRow {
  int modulus = 0;
  SkewMorphism rho;
  /// Smallest n in the census with some phi of Z_n such that phi' = rho.
  std::optional<int> host{};
};

/// For every stored rho of modulus at most `bound`, whether rho is the derived
/// skew morphism of some stored phi.
std::vector<ClosureRow> derived_closure(const Census& census, int bound);

/// Smallest modulus hosting a phi whose derived skew morphism is rho, if any.
std::optional<int> smallest_host(const Census& census, const SkewMorphism& rho);

struct StatsRow {
  int n = 0;
  std::size_t total = 0;
  std::size_t automorphisms = 0;
  std::size_t proper = 0;
  int max_complexity = 0;
  std::map<int, std::size_t> by_order{};
  std::map<int, std::size_t> by_complexity{};
};

std::vector<StatsRow> stats(const Census& census);

/// Header line `n,total,automorphisms,proper,max_complexity` and one line per row.
std::string stats_csv(std::span<const StatsRow> rows);

/// Right-aligned columns with the same fields as stats_csv.
std::string stats_table(std::span<const StatsRow> rows);

}  // namespace skewmorph

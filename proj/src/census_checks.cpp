#include "skewmorph/census_checks.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "skewmorph/error.hpp"
#include "skewmorph/numth.hpp"

namespace skewmorph {

VerifyReport verify(const Census& census, int n, const oracle::Options& options) {
  const std::vector<SkewMorphism> expected = oracle::enumerate_all(n, options);
  const std::vector<SkewMorphism> actual = census.morphisms(n);
  VerifyReport report{.n = n, .census_count = actual.size(), .oracle_count = expected.size()};
  std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(),
                      std::back_inserter(report.missing));
  std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                      std::back_inserter(report.extra));
  return report;
}

std::int64_t predicted_prime_order_count(int p, int n) {
  if (!numth::is_prime(p) || n < 1 || n % p != 0) return 0;
  std::int64_t sum = 0;
  for (std::int64_t k : numth::divisors(p - 1))
    if (k != 1 && n % k == 0) sum += numth::totient(k);
  return sum * (p - 1);
}

CountCheck check_prime_order_count(const Census& census, int p, int n) {
  CountCheck check{.predicted = predicted_prime_order_count(p, n)};
  for (const CensusEntry& e : census.stratum(n).entries())
    if (e.phi.order() == p && e.complexity >= 2) ++check.observed;
  return check;
}

CountCheck check_order4_count(const Census& census, std::span<const int> primes) {
  if (primes.empty())
    throw Error(ErrorCode::kBadParameters, "the order-4 count needs at least one odd prime");
  std::set<int> seen;
  std::int64_t n = 16;
  for (int p : primes) {
    if (p < 3 || !numth::is_prime(p) || !seen.insert(p).second)
      throw Error(ErrorCode::kBadParameters, "primes must be distinct odd primes");
    n *= p;
  }
  if (n > census.max_n())
    throw Error(ErrorCode::kIncompleteCensus, "census does not reach n=" + std::to_string(n));
  CountCheck check{.predicted = std::int64_t{1} << (primes.size() + 2)};
  for (const CensusEntry& e : census.stratum(static_cast<int>(n)).entries())
    if (e.phi.order() == 4 && e.complexity >= 2) ++check.observed;
  return check;
}

std::set<int> comp_set(const Census& census, int n) {
  std::set<int> out;
  for (const CensusEntry& e : census.stratum(n).entries()) out.insert(e.complexity);
  return out;
}

int max_complexity(const Census& census, int n) {
  const std::set<int> comps = comp_set(census, n);
  return comps.empty() ? 0 : *comps.rbegin();
}

StructureReport check_structure_criteria(const Census& census, int n) {
  StructureReport r{.n = n};
  const std::set<int> comps = comp_set(census, n);
  const int top = comps.empty() ? 0 : *comps.rbegin();
  r.has_proper = top >= 2;
  r.expect_proper = !(n == 4 || numth::gcd(n, numth::totient(n)) == 1);
  r.all_at_most_two = top <= 2;
  int e = 0;
  int odd = n;
  while (odd % 2 == 0) {
    odd /= 2;
    ++e;
  }
  r.expect_at_most_two = e <= 4 && numth::is_square_free(odd);
  for (std::int64_t p : numth::prime_factors(n))
    if (p != 2 && n % (p * p * p) == 0) r.odd_cube = true;
  r.has_four_or_more = top >= 4;
  return r;
}

namespace {

std::int64_t host_key(int order, int index) {
  return (static_cast<std::int64_t>(order) << 32) | static_cast<std::uint32_t>(index);
}

std::map<std::int64_t, int> smallest_hosts(const Census& census) {
  std::map<std::int64_t, int> hosts;
  for (int n = 1; n <= census.max_n(); ++n)
    for (const CensusEntry& e : census.stratum(n).entries())
      hosts.emplace(host_key(e.phi.order(), e.derived_index), n);
  return hosts;
}

}  // namespace

std::vector<ClosureRow> derived_closure(const Census& census, int bound) {
  const std::map<std::int64_t, int> hosts = smallest_hosts(census);
  std::vector<ClosureRow> rows;
  for (int k = 1; k <= std::min(bound, census.max_n()); ++k) {
    const Stratum& s = census.stratum(k);
    for (std::size_t i = 0; i < s.size(); ++i) {
      ClosureRow row{.modulus = k, .rho = s[i].phi};
      if (const auto it = hosts.find(host_key(k, static_cast<int>(i))); it != hosts.end())
        row.host = it->second;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::optional<int> smallest_host(const Census& census, const SkewMorphism& rho) {
  const int k = rho.modulus();
  if (k > census.max_n()) return std::nullopt;
  const auto index = census.stratum(k).find(rho.images());
  if (!index) return std::nullopt;
  for (int n = 1; n <= census.max_n(); ++n)
    for (const CensusEntry& e : census.stratum(n).entries())
      if (e.phi.order() == k && e.derived_index == *index) return n;
  return std::nullopt;
}

std::vector<StatsRow> stats(const Census& census) {
  std::vector<StatsRow> rows;
  for (int n = 1; n <= census.max_n(); ++n) {
    StatsRow row{.n = n};
    for (const CensusEntry& e : census.stratum(n).entries()) {
      ++row.total;
      if (e.complexity >= 2)
        ++row.proper;
      else
        ++row.automorphisms;
      row.max_complexity = std::max(row.max_complexity, e.complexity);
      ++row.by_order[e.phi.order()];
      ++row.by_complexity[e.complexity];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string stats_csv(std::span<const StatsRow> rows) {
  std::ostringstream out;
  out << "n,total,automorphisms,proper,max_complexity\n";
  for (const StatsRow& r : rows)
    out << r.n << ',' << r.total << ',' << r.automorphisms << ',' << r.proper << ','
        << r.max_complexity << '\n';
  return out.str();
}

std::string stats_table(std::span<const StatsRow> rows) {
  std::ostringstream out;
  out << std::setw(6) << "n" << std::setw(8) << "total" << std::setw(15) << "automorphisms"
      << std::setw(8) << "proper" << std::setw(16) << "max_complexity" << '\n';
  for (const StatsRow& r : rows)
    out << std::setw(6) << r.n << std::setw(8) << r.total << std::setw(15) << r.automorphisms
        << std::setw(8) << r.proper << std::setw(16) << r.max_complexity << '\n';
  return out.str();
}

}  // namespace skewmorph

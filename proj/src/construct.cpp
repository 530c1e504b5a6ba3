#include "skewmorph/construct.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "skewmorph/error.hpp"
#include "skewmorph/numth.hpp"

namespace skewmorph {

namespace {

using Map = std::vector<int>;

std::size_t idx(std::int64_t x) { return static_cast<std::size_t>(x); }

[[noreturn]] void precondition(const std::string& what) {
  throw Error(ErrorCode::kPreconditionViolated, what);
}

// [x, f(x), f^2(x), ...] up to the first repetition of x.
std::vector<int> cycle_of(const SkewMorphism& f, int x) {
  std::vector<int> cycle{x};
  for (int y = f(x); y != x; y = f(y)) cycle.push_back(y);
  return cycle;
}

bool fixes_zero_bijectively(const Map& map) { return map[0] == 0 && is_permutation(map); }

int iterate(const Map& map, std::int64_t times, int x) {
  for (std::int64_t s = 0; s < times; ++s) x = map[idx(x)];
  return x;
}

// phi^e as a map, for arbitrary (not necessarily bijective) phi.
Map map_power(const Map& map, std::int64_t e, bool bijective) {
  if (bijective) return permutation_power(map, e);
  Map out(map.size());
  for (std::size_t x = 0; x < map.size(); ++x) out[x] = iterate(map, e, static_cast<int>(x));
  return out;
}

// Checks value(x) = target(x) for every positive x, where value(x) is the
// x-th term of the sequence 1, f(1), f^2(1), ... and target only depends on
// x modulo `period`. The sequence is eventually periodic, so a bounded
// number of terms decides the infinite statement.
template <class Target>
bool orbit_matches(const Map& map, int period, std::uint64_t& ops, Target target) {
  const std::size_t n = map.size();
  std::vector<std::int64_t> first_seen(n, -1);
  std::int64_t x = 0;
  int y = 1 % static_cast<int>(n);
  while (first_seen[idx(y)] < 0) {
    first_seen[idx(y)] = x;
    y = map[idx(y)];
    ++x;
  }
  const std::int64_t tail = first_seen[idx(y)];
  const std::int64_t cycle = x - tail;
  const std::int64_t limit = tail + std::lcm(cycle, static_cast<std::int64_t>(period));
  y = 1 % static_cast<int>(n);
  for (std::int64_t k = 1; k <= std::max<std::int64_t>(limit, 1); ++k) {
    y = map[idx(y)];
    ++ops;
    if (!target(k % period, y)) return false;
  }
  return true;
}

class Failures {
public:
  Failures(CandidateReport& report, BuildMode mode) : report_(report), mode_(mode) {}

  // Records a failure; returns true when evaluation should stop.
  bool fail(Condition c) {
    if (!report_.failed_condition) report_.failed_condition = c;
    report_.failures.push_back(c);
    return mode_ == BuildMode::kFirstFailure;
  }

  bool any() const { return !report_.failures.empty(); }

private:
  CandidateReport& report_;
  BuildMode mode_;
};

// pi_phi(a) = alpha^a(1), written as an exponent in {1, ..., ell}.
std::vector<int> powers_from_alpha(const SkewMorphism& alpha, int n) {
  const auto orbit = alpha.orbit_of_one();
  const int ell = alpha.modulus();
  std::vector<int> powers(idx(n));
  for (int a = 0; a < n; ++a)
    powers[idx(a)] = exponent_rep(orbit[idx(a) % orbit.size()], ell);
  return powers;
}

SkewMorphism accept(const ReductionTriple& t, Map images, bool preconditions_checked) {
  if (!preconditions_checked) {
    std::optional<SkewMorphism> checked;
    try {
      checked = SkewMorphism::validate(t.n, images);
    } catch (const Error& e) {
      throw Error(ErrorCode::kPreconditionViolated,
                  std::string("conditions hold but the result is not a skew morphism: ") + e.what());
    }
    if (checked->order() != t.order)
      throw Error(ErrorCode::kPreconditionViolated,
                  "conditions hold but the result has order " + std::to_string(checked->order()));
    return *checked;
  }
  SkewMorphism result = detail::assemble(t.n, std::move(images), powers_from_alpha(t.alpha, t.n));
  if (result.order() != t.order)
    throw Error(ErrorCode::kInternal, "accepted candidate " + result.to_string() + " has order " +
                                          std::to_string(result.order()) + ", expected " +
                                          std::to_string(t.order));
  return result;
}

}  // namespace

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::kO1: return "O1";
    case Condition::kO3: return "O3";
    case Condition::kE1: return "E1";
    case Condition::kE3: return "E3";
    case Condition::kE4: return "E4";
    case Condition::kE5: return "E5";
    case Condition::kNotPermutation: return "NotPermutation";
  }
  return "?";
}

bool odd_compatible(const SkewMorphism& alpha, const SkewMorphism& beta, int m) {
  const int d = beta.order();
  if (m < 1 || alpha.modulus() != d * m) return false;
  const SkewMorphism beta_prime = derived(beta);
  for (int x = 0; x < d; ++x) {
    const int image = alpha(x * m);
    if (image % m != 0 || image / m != beta_prime(x)) return false;
  }
  return true;
}

bool even_compatible(const SkewMorphism& alpha, const SkewMorphism& beta, int m) {
  const int d = beta.order();
  const int ell = alpha.modulus();
  if (ell % d != 0) return false;
  const SkewMorphism beta_prime = derived(beta);
  const Map alpha_m = alpha.power_map(m);
  for (int x = 0; x < ell; ++x)
    if (alpha_m[idx(x)] % d != beta_prime(x % d)) return false;
  return true;
}

void check_odd_preconditions(const ReductionTriple& t) {
  if (t.parity != Parity::kOdd) precondition("triple is not of odd parity");
  const int n = t.n;
  const int m = t.auto_order;
  if (n < 1 || t.h < 0 || t.h >= n) precondition("h must lie in Z_n");
  if (m < 2) precondition("auto-order must be at least 2");
  if (t.beta.modulus() != n) precondition("beta must act on Z_" + std::to_string(n));
  if (t.order != t.beta.order() * m) precondition("order must equal ord(beta) * m");
  if (t.alpha.modulus() != t.order) precondition("alpha must act on Z_" + std::to_string(t.order));
  const ComplexityProfile profile = complexity(t.alpha);
  if (profile.complexity < 2 || profile.complexity % 2 != 0)
    precondition("alpha must have even complexity at least 2");
  if (profile.auto_order != m) precondition("alpha must have auto-order m");
  if (n % t.alpha.order() != 0) precondition("ord(alpha) must divide n");
  if (!odd_compatible(t.alpha, t.beta, m)) precondition("O2 fails: beta' differs from alpha on <m>");
}

void check_even_preconditions(const ReductionTriple& t) {
  if (t.parity != Parity::kEven) precondition("triple is not of even parity");
  const int n = t.n;
  const int m = t.auto_order;
  const int ell = t.order;
  if (n < 1 || t.h < 0 || t.h >= n) precondition("h must lie in Z_n");
  if (m < 2 || n % m != 0) precondition("auto-order must be a divisor of n that is at least 2");
  if (ell >= n) precondition("order must be smaller than n");
  if (t.h % m != 1 % m) precondition("h must lie in 1 + <m>");
  if (t.beta.modulus() != n / m) precondition("beta must act on Z_" + std::to_string(n / m));
  if (ell % t.beta.order() != 0) precondition("ord(beta) must divide the order");
  if (t.alpha.modulus() != ell) precondition("alpha must act on Z_" + std::to_string(ell));
  const ComplexityProfile profile = complexity(t.alpha);
  if (profile.complexity % 2 != 1) precondition("alpha must have odd complexity");
  if (profile.auto_order != m) precondition("alpha must have auto-order m");
  if (n % t.alpha.order() != 0) precondition("ord(alpha) must divide n");
  if (!even_compatible(t.alpha, t.beta, m))
    precondition("E2 fails: beta' differs from alpha^m modulo ord(beta)");
}

CandidateReport build_odd(const ReductionTriple& t, const BuildOptions& options) {
  if (options.check_preconditions) check_odd_preconditions(t);
  CandidateReport report{.triple = t};
  Failures failures(report, options.mode);
  std::uint64_t& ops = report.group_ops;

  const int n = t.n;
  const int m = t.auto_order;
  const int ell = t.order;
  const auto alpha_orbit = t.alpha.orbit_of_one();
  const int alpha_order = t.alpha.order();
  const std::vector<int> beta_h = cycle_of(t.beta, t.h);

  // The x = 1 instance of O1 needs only phi(1) = h.
  if (options.mode == BuildMode::kFirstFailure &&
      t.h % alpha_order != t.alpha.power(1) % alpha_order) {
    failures.fail(Condition::kO1);
    return report;
  }

  // phi(a) = phi(a-1) + beta^(k_(a-1))(h); phi(0) is read as phi(n).
  Map phi(idx(n));
  std::int64_t value = 0;
  for (int a = 1; a <= n; ++a) {
    const int alpha_e = alpha_orbit[idx(a - 1) % alpha_orbit.size()];
    const int k = (alpha_e - 1) / m;
    value = (value + beta_h[idx(k) % beta_h.size()]) % n;
    phi[idx(a % n)] = static_cast<int>(value);
    ++ops;
  }
  const bool bijective = fixes_zero_bijectively(phi);
  ops += static_cast<std::uint64_t>(n);
  if (!bijective && failures.fail(Condition::kNotPermutation)) return report;

  // O3: phi^m = beta.
  const Map phi_m = map_power(phi, m, bijective);
  ops += static_cast<std::uint64_t>(n);
  if (!std::equal(phi_m.begin(), phi_m.end(), t.beta.images().begin()) &&
      failures.fail(Condition::kO3))
    return report;

  // O1: phi^x(1) = pi_alpha(x) modulo ord(alpha).
  const bool o1 = orbit_matches(phi, ell, ops, [&](std::int64_t x, int y) {
    return y % alpha_order == t.alpha.power(static_cast<int>(x)) % alpha_order;
  });
  if (!o1 && failures.fail(Condition::kO1)) return report;

  if (!failures.any()) report.result = accept(t, std::move(phi), options.check_preconditions);
  return report;
}

CandidateReport build_even(const ReductionTriple& t, const BuildOptions& options) {
  if (options.check_preconditions) check_even_preconditions(t);
  CandidateReport report{.triple = t};
  Failures failures(report, options.mode);
  std::uint64_t& ops = report.group_ops;

  const int n = t.n;
  const int m = t.auto_order;
  const int ell = t.order;
  const int f = (t.h - 1 + n) % n / m;
  const auto alpha_orbit = t.alpha.orbit_of_one();
  const int alpha_order = t.alpha.order();
  const std::vector<int> beta_f = cycle_of(t.beta, f);

  // psi[e] = psi^e(1) = psi^(e-1)(1) + beta^(alpha(e-1))(f) m.
  std::vector<int> psi(idx(ell) + 1);
  psi[0] = 1 % n;
  for (int e = 1; e <= ell; ++e) {
    const int exponent = t.alpha(e - 1);
    const std::int64_t step = static_cast<std::int64_t>(beta_f[idx(exponent) % beta_f.size()]) * m;
    psi[idx(e)] = static_cast<int>((psi[idx(e - 1)] + step) % n);
    ++ops;
  }

  // E5: the psi-orbit of 1 closes after exactly ell steps.
  bool e5 = psi[idx(ell)] == 1 % n;
  for (int i = 1; i < ell && e5; ++i, ++ops)
    if (psi[idx(i)] == 1 % n) e5 = false;
  if (!e5 && failures.fail(Condition::kE5)) return report;

  // E1: psi^x(1) = pi_alpha(x) modulo ord(alpha) for all x > 0. After ell
  // steps psi advances by a fixed shift, so x = q ell + r covers everything
  // once q runs through the additive order of that shift.
  {
    const std::int64_t shift = numth::mod(psi[idx(ell)] - psi[0], n);
    const std::int64_t rounds = n / numth::gcd(shift, n);
    bool e1 = true;
    for (std::int64_t q = 0; q < rounds && e1; ++q) {
      for (int r = (q == 0 ? 1 : 0); r < ell; ++r) {
        const std::int64_t y = (psi[idx(r)] + q * shift) % n;
        ++ops;
        if (y % alpha_order != t.alpha.power(r) % alpha_order) {
          e1 = false;
          break;
        }
      }
    }
    if (!e1 && failures.fail(Condition::kE1)) return report;
  }

  // phi(a) = phi(a-1) + psi^(alpha^(a-1)(1))(1); phi(0) is read as phi(n).
  Map phi(idx(n));
  std::int64_t value = 0;
  for (int a = 1; a <= n; ++a) {
    const int exponent = alpha_orbit[idx(a - 1) % alpha_orbit.size()];
    value = (value + psi[idx(exponent)]) % n;
    phi[idx(a % n)] = static_cast<int>(value);
    ++ops;
  }
  const bool bijective = fixes_zero_bijectively(phi);
  ops += static_cast<std::uint64_t>(n);
  if (!bijective && failures.fail(Condition::kNotPermutation)) return report;

  // E3: phi(x m) = beta(x) m.
  bool e3 = true;
  for (int x = 0; x < n / m && e3; ++x, ++ops)
    if (phi[idx(x) * idx(m)] != t.beta(x) * m) e3 = false;
  if (!e3 && failures.fail(Condition::kE3)) return report;

  // E4: phi(x + m) = phi(x) + phi^(alpha^x(1))(m).
  bool e4 = true;
  if (bijective) {
    std::vector<int> m_orbit{m % n};
    for (int y = phi[idx(m % n)]; y != m % n; y = phi[idx(y)]) m_orbit.push_back(y);
    for (int x = 0; x < n && e4; ++x, ++ops) {
      const int exponent = alpha_orbit[idx(x) % alpha_orbit.size()];
      const int rhs = (phi[idx(x)] + m_orbit[idx(exponent) % m_orbit.size()]) % n;
      if (phi[idx((x + m) % n)] != rhs) e4 = false;
    }
  } else {
    for (int x = 0; x < n && e4; ++x) {
      const int exponent = alpha_orbit[idx(x) % alpha_orbit.size()];
      ops += static_cast<std::uint64_t>(exponent);
      const int rhs = (phi[idx(x)] + iterate(phi, exponent, m % n)) % n;
      if (phi[idx((x + m) % n)] != rhs) e4 = false;
    }
  }
  if (!e4 && failures.fail(Condition::kE4)) return report;

  if (!failures.any()) report.result = accept(t, std::move(phi), options.check_preconditions);
  return report;
}

CandidateReport build(const ReductionTriple& triple, const BuildOptions& options) {
  return triple.parity == Parity::kOdd ? build_odd(triple, options) : build_even(triple, options);
}

std::vector<SkewMorphism> automorphisms(int n) {
  std::vector<SkewMorphism> out;
  for (std::int64_t u : numth::units(n)) out.push_back(SkewMorphism::from_automorphism(n, u));
  return out;
}

SkewMorphism prime_order_skew(int p, int n, std::int64_t u, std::int64_t v) {
  const auto bad = [&](const std::string& why) {
    throw Error(ErrorCode::kBadParameters, "prime_order_skew(p=" + std::to_string(p) +
                                               ", n=" + std::to_string(n) + ", u=" +
                                               std::to_string(u) + ", v=" + std::to_string(v) +
                                               "): " + why);
  };
  if (!numth::is_prime(p)) bad("p is not prime");
  if (n < 1 || n % p != 0) bad("p does not divide n");
  const int step = n / p;
  if (u <= 0 || u >= n || u % step != 0) bad("u is not a non-zero multiple of n/p");
  if (v < 2 || v > p - 1) bad("v is not in {2, ..., p-1}");
  if (n % numth::multiplicative_order(v, p) != 0) bad("multiplicative order of v does not divide n");

  std::vector<int> images(idx(n));
  std::int64_t geometric = 0;  // 1 + v + ... + v^(a-1) modulo p
  std::int64_t power = 1;
  for (int a = 0; a < n; ++a) {
    images[idx(a)] = static_cast<int>((a + u * geometric) % n);
    geometric = (geometric + power) % p;
    power = power * v % p;
  }
  try {
    return SkewMorphism::validate(n, images);
  } catch (const Error& e) {
    throw Error(ErrorCode::kInternal, std::string("prime-order formula gave ") + e.what());
  }
}

std::vector<int> pgroup_permutation(int p, int e, std::int64_t i, std::int64_t j, std::int64_t k,
                                    std::int64_t l) {
  if (p < 3 || !numth::is_prime(p) || e < 2)
    throw Error(ErrorCode::kBadParameters, "p must be an odd prime and e at least 2");
  if (i < 0 || j < 0 || k < 0 || l < 0)
    throw Error(ErrorCode::kBadParameters, "exponents must be non-negative");
  const std::int64_t n = numth::ipow(p, e);
  const std::int64_t t = numth::element_of_unit_order(p, e, p - 1);
  const std::int64_t a_factor = numth::pow_mod(p + 1, i, n);
  const std::int64_t b_factor = numth::pow_mod(t, k, n);

  const auto make_b = [&](std::int64_t jj) {
    const std::int64_t ratio = numth::pow_mod(p + 1, jj, n);
    std::vector<int> out(idx(n));
    std::int64_t acc = 0;
    std::int64_t term = 1;
    for (std::int64_t x = 0; x < n; ++x) {
      out[idx(x)] = static_cast<int>(acc);
      acc = (acc + term) % n;
      term = term * ratio % n;
    }
    return out;
  };
  const std::vector<int> bj = make_b(j);
  const std::vector<int> bl = make_b(l);
  if (!is_permutation(bj) || !is_permutation(bl))
    throw Error(ErrorCode::kInternal, "b_j is not a permutation");
  std::vector<int> bj_inverse(idx(n));
  for (std::int64_t x = 0; x < n; ++x) bj_inverse[idx(bj[idx(x)])] = static_cast<int>(x);

  std::vector<int> images(idx(n));
  for (std::int64_t x = 0; x < n; ++x) {
    std::int64_t y = bl[idx(bj[idx(x)])];
    y = y * b_factor % n;
    y = y * a_factor % n;
    images[idx(x)] = bj_inverse[idx(y)];
  }
  return images;
}

std::optional<std::string_view> pgroup_condition_failure(int p, int e, std::int64_t i,
                                                         std::int64_t j, std::int64_t k,
                                                         std::int64_t l) {
  const std::int64_t top = numth::ipow(p, e - 1);
  const std::int64_t pe2 = numth::ipow(p, e - 2);
  if (i < 0 || i >= top || l < 0 || l >= top || k < 0 || k > p - 2) return "C1";
  int c = 0;
  for (std::int64_t g = numth::gcd(i, pe2); g > 1; g /= p) ++c;
  if (j < 0 || j >= numth::ipow(p, e - 2 - c)) return "C1";
  if ((i == 0 || k == 0) && l != 0) return "C2";
  if (i != 0 && k != 0) {
    if (j % numth::ipow(p, c) != 0 || l % numth::ipow(p, std::max(c, e - 2 - c)) != 0)
      return "C3";
  }
  return std::nullopt;
}

SkewMorphism pgroup_skew(int p, int e, std::int64_t i, std::int64_t j, std::int64_t k,
                         std::int64_t l) {
  if (p < 3 || !numth::is_prime(p) || e < 2)
    throw Error(ErrorCode::kBadParameters, "p must be an odd prime and e at least 2");
  if (const auto failed = pgroup_condition_failure(p, e, i, j, k, l))
    throw Error(ErrorCode::kConditionViolated,
                std::string(*failed) + " fails for (i,j,k,l) = (" + std::to_string(i) + "," +
                    std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) + ")");
  return SkewMorphism::validate(static_cast<int>(numth::ipow(p, e)),
                                pgroup_permutation(p, e, i, j, k, l));
}

}  // namespace skewmorph

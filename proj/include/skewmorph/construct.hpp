#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "skewmorph/reduce.hpp"
#include "skewmorph/skew_morphism.hpp"

namespace skewmorph {

/// Conditions checked after building a candidate from a reduction triple.
/// O1/O3 belong to the odd-complexity construction, E1/E3/E4/E5 to the
/// even one. kNotPermutation covers a built map that is not a bijection
/// fixing 0.
enum class Condition { kO1, kO3, kE1, kE3, kE4, kE5, kNotPermutation };

std::string_view to_string(Condition c);

enum class BuildMode {
  kFirstFailure,   // stop at the first failed condition (cheapest checks first)
  kAllConditions,  // evaluate every condition, also on non-bijective maps
};

struct BuildOptions {
  BuildMode mode = BuildMode::kFirstFailure;
  /// Verify the structural preconditions on (alpha, beta, m) first and throw
  /// Error(kPreconditionViolated) if they fail. When false, a map passing all
  /// conditions is validated instead, and Error(kPreconditionViolated) is
  /// thrown if it is not a skew morphism of order ell.
  bool check_preconditions = true;
};

struct CandidateReport {
  ReductionTriple triple;
  std::optional<SkewMorphism> result{};
  /// First failed condition in evaluation order.
  std::optional<Condition> failed_condition{};
  /// Every failed condition; in kFirstFailure mode at most one entry.
  std::vector<Condition> failures{};
  /// Group operations spent on building and checking.
  std::uint64_t group_ops = 0;

  bool accepted() const { return result.has_value(); }
};

/// Builds phi(a) = h + beta^k_1(h) + ... + beta^k_(a-1)(h) with
/// k_e = (alpha^e(1) - 1) / m and checks O1 and O3.
CandidateReport build_odd(const ReductionTriple& triple, const BuildOptions& options = {});

/// Builds the orbit psi of 1 and then phi from it, and checks E1, E3, E4, E5.
CandidateReport build_even(const ReductionTriple& triple, const BuildOptions& options = {});

/// Dispatches on triple.parity.
CandidateReport build(const ReductionTriple& triple, const BuildOptions& options = {});

/// Throw Error(kPreconditionViolated) describing the first violated
/// precondition. The odd branch includes O2 (beta' agrees with alpha on <m>),
/// the even branch E2 (beta' agrees with alpha^m modulo ord(beta)).
void check_odd_preconditions(const ReductionTriple& triple);
void check_even_preconditions(const ReductionTriple& triple);

/// O2: beta'(x) = alpha(x m) / m for every x.
bool odd_compatible(const SkewMorphism& alpha, const SkewMorphism& beta, int m);

/// E2: beta'(x) = alpha^m(x) modulo ord(beta) for every x.
bool even_compatible(const SkewMorphism& alpha, const SkewMorphism& beta, int m);

/// x -> u x for every unit u modulo n, in increasing order of u.
std::vector<SkewMorphism> automorphisms(int n);

/// a -> a + u (1 + v + ... + v^(a-1)), a proper skew morphism of order p.
/// Requires p prime dividing n, u a non-zero multiple of n/p, v in
/// {2, ..., p-1} with multiplicative order modulo p dividing n.
/// Throws Error(kBadParameters).
SkewMorphism prime_order_skew(int p, int n, std::int64_t u, std::int64_t v);

/// Image array of b_j^-1 a^i b^k b_l b_j on Z_{p^e} (rightmost map applied
/// first), where a(x) = (p+1) x, b(x) = t x for the smallest unit t of
/// multiplicative order p-1, and b_j(x) = 1 + (p+1)^j + ... + (p+1)^((x-1) j).
/// No parameter conditions are checked beyond p odd prime and e >= 2.
std::vector<int> pgroup_permutation(int p, int e, std::int64_t i, std::int64_t j,
                                    std::int64_t k, std::int64_t l);

/// Name of the first parameter condition ("C1", "C2", "C3") violated by
/// (i, j, k, l), if any.
std::optional<std::string_view> pgroup_condition_failure(int p, int e, std::int64_t i,
                                                         std::int64_t j, std::int64_t k,
                                                         std::int64_t l);

/// The skew morphism given by pgroup_permutation. Throws
/// Error(kConditionViolated) naming the violated condition,
/// Error(kBadParameters) for p not an odd prime or e < 2, and the validation
/// error (kNotSkew) for the few admissible parameter sets with e >= 3 whose
/// permutation is not a skew morphism, e.g. (3, 3, 3, 0, 1, 6).
SkewMorphism pgroup_skew(int p, int e, std::int64_t i, std::int64_t j, std::int64_t k,
                         std::int64_t l);

}  // namespace skewmorph

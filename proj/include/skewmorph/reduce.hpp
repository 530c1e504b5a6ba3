#pragma once

#include <cstdint>
#include <vector>

#include "skewmorph/skew_morphism.hpp"

namespace skewmorph {

/// Complexity c, auto-order m and the moduli n_0 = n, n_1, ..., n_c = m of the
/// successive derived skew morphisms.
struct ComplexityProfile {
  int complexity = 0;
  int auto_order = 1;
  std::vector<int> chain;

  friend bool operator==(const ComplexityProfile&, const ComplexityProfile&) = default;
};

enum class Parity { kEven, kOdd };

/// (h, alpha, beta) of a proper skew morphism phi of Z_n with order `order`:
/// h = phi(1), alpha = phi', and beta = phi restricted to <m> (even
/// complexity, a skew morphism of Z_{n/m}) or phi^m (odd complexity, of Z_n).
struct ReductionTriple {
  Parity parity = Parity::kEven;
  int n = 1;
  int order = 1;
  int auto_order = 1;
  int h = 0;
  SkewMorphism alpha = SkewMorphism::identity(1);
  SkewMorphism beta = SkewMorphism::identity(1);

  friend bool operator==(const ReductionTriple&, const ReductionTriple&) = default;
};

/// The derived skew morphism phi' of Z_{ord(phi)}, a -> sigma(a, 1).
SkewMorphism derived(const SkewMorphism& phi);

/// phi taken modulo n / |ker phi|.
SkewMorphism star(const SkewMorphism& phi);

/// True when a = b (mod m) exactly when phi(a) = phi(b) (mod m).
bool compatible_modulo(const SkewMorphism& phi, int m);

/// phi taken modulo m. Throws Error(kNotCompatible) unless compatible_modulo(phi, m).
SkewMorphism modulo(const SkewMorphism& phi, int m);

/// The skew morphism beta of Z_{n/m} with phi(i m) = beta(i) m.
/// Throws Error(kNotPreserved) if phi does not map <m> onto itself.
SkewMorphism restrict_to_subgroup(const SkewMorphism& phi, int m);

/// Whether phi' preserves the subgroup of Z_{ord(phi)} generated by e, which
/// is exactly when phi^e is again a skew morphism.
bool has_skew_power(const SkewMorphism& phi, std::int64_t e);

/// phi^e. Throws Error(kNotSkewPower) when has_skew_power(phi, e) is false.
SkewMorphism power_skew(const SkewMorphism& phi, std::int64_t e);

/// Defined for every n; the identity of Z_1 gets the sentinel (0, 1).
ComplexityProfile complexity(const SkewMorphism& phi);

/// Red(phi). Throws Error(kNotProper) if phi is an automorphism.
ReductionTriple reduction(const SkewMorphism& phi);

}  // namespace skewmorph

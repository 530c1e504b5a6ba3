#include "skewmorph/reduce.hpp"

#include <string>

#include "skewmorph/error.hpp"
#include "skewmorph/numth.hpp"

namespace skewmorph {

namespace {

// Every caller below builds something the theory guarantees to be a skew
// morphism; a validation failure is a bug, not a user error.
SkewMorphism revalidate(int n, std::span<const int> images, const char* what) {
  try {
    return SkewMorphism::validate(n, images);
  } catch (const Error& e) {
    throw Error(ErrorCode::kInternal, std::string(what) + " produced an invalid map: " + e.what());
  }
}

}  // namespace

SkewMorphism derived(const SkewMorphism& phi) {
  const int ell = phi.order();
  std::vector<int> images(static_cast<std::size_t>(ell));
  const auto orbit = phi.orbit_of_one();
  std::int64_t acc = 0;
  for (int a = 0; a < ell; ++a) {
    images[static_cast<std::size_t>(a)] = static_cast<int>(acc % ell);
    acc += phi.power(orbit[static_cast<std::size_t>(a)]);
  }
  return revalidate(ell, images, "derived");
}

SkewMorphism star(const SkewMorphism& phi) {
  const int k = phi.kernel().generator;
  try {
    return modulo(phi, k);
  } catch (const Error& e) {
    throw Error(ErrorCode::kInternal, std::string("quotient by the kernel failed: ") + e.what());
  }
}

bool compatible_modulo(const SkewMorphism& phi, int m) {
  const int n = phi.modulus();
  if (m < 1 || n % m != 0) return false;
  std::vector<int> induced(static_cast<std::size_t>(m), -1);
  for (int a = 0; a < n; ++a) {
    int& slot = induced[static_cast<std::size_t>(a % m)];
    const int image = phi(a) % m;
    if (slot == -1)
      slot = image;
    else if (slot != image)
      return false;
  }
  return is_permutation(induced);
}

SkewMorphism modulo(const SkewMorphism& phi, int m) {
  if (!compatible_modulo(phi, m))
    throw Error(ErrorCode::kNotCompatible,
                std::to_string(m) + " is not a projection modulus for " + phi.to_string());
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) images[static_cast<std::size_t>(x)] = phi(x) % m;
  return revalidate(m, images, "modulo");
}

SkewMorphism restrict_to_subgroup(const SkewMorphism& phi, int m) {
  const int n = phi.modulus();
  if (m < 1 || n % m != 0)
    throw Error(ErrorCode::kNotPreserved, std::to_string(m) + " does not divide " + std::to_string(n));
  const int size = n / m;
  std::vector<int> images(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) {
    const int image = phi(i * m);
    if (image % m != 0)
      throw Error(ErrorCode::kNotPreserved, "<" + std::to_string(m) + "> is not preserved by " +
                                                phi.to_string());
    images[static_cast<std::size_t>(i)] = image / m;
  }
  return revalidate(size, images, "restriction");
}

bool has_skew_power(const SkewMorphism& phi, std::int64_t e) {
  const int ell = phi.order();
  const auto g = static_cast<int>(numth::gcd(numth::mod(e, ell), ell));
  if (g == ell || g == 1) return true;
  const SkewMorphism d = derived(phi);
  for (int x = 0; x < ell; x += g)
    if (d(x) % g != 0) return false;
  return true;
}

SkewMorphism power_skew(const SkewMorphism& phi, std::int64_t e) {
  if (!has_skew_power(phi, e))
    throw Error(ErrorCode::kNotSkewPower,
                "power " + std::to_string(e) + " of " + phi.to_string() + " is not skew");
  const std::vector<int> images = phi.power_map(e);
  return revalidate(phi.modulus(), images, "power");
}

ComplexityProfile complexity(const SkewMorphism& phi) {
  ComplexityProfile profile;
  profile.chain.push_back(phi.modulus());
  SkewMorphism current = phi;
  while (!current.is_identity()) {
    current = derived(current);
    ++profile.complexity;
    profile.chain.push_back(current.modulus());
  }
  profile.auto_order = current.modulus();
  return profile;
}

ReductionTriple reduction(const SkewMorphism& phi) {
  const ComplexityProfile profile = complexity(phi);
  if (profile.complexity < 2)
    throw Error(ErrorCode::kNotProper, phi.to_string() + " is an automorphism");
  const int m = profile.auto_order;
  ReductionTriple triple;
  triple.parity = profile.complexity % 2 == 0 ? Parity::kEven : Parity::kOdd;
  triple.n = phi.modulus();
  triple.order = phi.order();
  triple.auto_order = m;
  triple.h = phi(1);
  triple.alpha = derived(phi);
  triple.beta = triple.parity == Parity::kEven ? restrict_to_subgroup(phi, m) : power_skew(phi, m);
  return triple;
}

}  // namespace skewmorph

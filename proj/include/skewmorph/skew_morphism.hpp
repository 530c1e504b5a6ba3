#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace skewmorph {

class SkewMorphism;

namespace detail {
// Assembles a skew morphism from data the caller already knows to be
// consistent (images a permutation fixing 0, powers the matching power
// function). Only the order and the orbit of 1 are recomputed.
SkewMorphism assemble(int n, std::vector<int> images, std::vector<int> powers);
}  // namespace detail

/// A skew morphism of the cyclic group Z_n together with its derived data:
/// order, power function and orbit of 1. Values are immutable and share
/// their storage, so copies are cheap.
///
/// Power function values are stored as exponents in {1, ..., order}; the
/// residue 0 is written as `order`.
class SkewMorphism {
public:
  struct Kernel {
    int generator;  // the kernel is <generator> = <n / size>
    int size;
  };

  /// Checks that `images` is a skew morphism of Z_n and derives its order and
  /// power function. Throws Error with kNotAPermutation, kIdentityNotFixed or
  /// kNotSkew.
  static SkewMorphism validate(int n, std::span<const int> images);

  static SkewMorphism identity(int n);

  /// x -> u x. Throws Error(kNotAUnit) if gcd(u, n) != 1.
  static SkewMorphism from_automorphism(int n, std::int64_t u);

  int modulus() const { return data_->n; }
  int order() const { return data_->order; }
  std::span<const int> images() const { return data_->images; }
  std::span<const int> powers() const { return data_->powers; }
  /// [1, phi(1), ..., phi^(order-1)(1)], reduced mod n.
  std::span<const int> orbit_of_one() const { return data_->orbit; }

  int operator()(int a) const { return data_->images[static_cast<std::size_t>(a)]; }
  int power(int a) const { return data_->powers[static_cast<std::size_t>(a)]; }

  /// phi^e(a); negative e is allowed.
  int apply_power(std::int64_t e, int a) const;

  /// phi^e as an image array.
  std::vector<int> power_map(std::int64_t e) const;

  /// sigma(x, y) = pi(y) + pi(phi(y)) + ... + pi(phi^(x-1)(y)) as a residue
  /// in {0, ..., order - 1}.
  int sigma(std::int64_t x, int y) const;

  Kernel kernel() const;

  bool is_identity() const { return data_->order == 1; }
  bool is_automorphism() const;

  /// True if some stored power equals the order itself (residue 0). The power
  /// function of a non-trivial skew morphism never takes that value, so a
  /// true result flags an inconsistency.
  bool power_hits_order() const;

  std::string to_string() const;

  friend bool operator==(const SkewMorphism& a, const SkewMorphism& b);
  friend std::strong_ordering operator<=>(const SkewMorphism& a, const SkewMorphism& b);

private:
  struct Data {
    int n = 1;
    int order = 1;
    std::vector<int> images;
    std::vector<int> powers;
    std::vector<int> orbit;
  };

  explicit SkewMorphism(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  friend SkewMorphism detail::assemble(int, std::vector<int>, std::vector<int>);

  std::shared_ptr<const Data> data_;
};

/// Maps a residue modulo `order` to its exponent representative in {1, ..., order}.
inline int exponent_rep(std::int64_t residue, int order) {
  std::int64_t r = residue % order;
  if (r < 0) r += order;
  return r == 0 ? order : static_cast<int>(r);
}

/// Comma-separated image list, the census body-line syntax.
std::string format_images(std::span<const int> images);

/// Parses a comma-separated image list. Throws Error(kFormatError).
std::vector<int> parse_images(std::string_view text);

/// Image array of phi^e for an arbitrary permutation, via its cycles.
std::vector<int> permutation_power(std::span<const int> perm, std::int64_t e);

bool is_permutation(std::span<const int> images);

}  // namespace skewmorph

#include "skewmorph/skew_morphism.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "skewmorph/error.hpp"
#include "skewmorph/numth.hpp"

namespace skewmorph {

namespace {

std::vector<int> orbit_of(std::span<const int> images, int start) {
  std::vector<int> orbit{start};
  for (int x = images[static_cast<std::size_t>(start)]; x != start;
       x = images[static_cast<std::size_t>(x)])
    orbit.push_back(x);
  return orbit;
}

}  // namespace

bool is_permutation(std::span<const int> images) {
  std::vector<char> seen(images.size(), 0);
  for (int v : images) {
    if (v < 0 || static_cast<std::size_t>(v) >= images.size() || seen[static_cast<std::size_t>(v)])
      return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

std::vector<int> permutation_power(std::span<const int> perm, std::int64_t e) {
  const std::size_t n = perm.size();
  std::vector<int> out(n);
  std::vector<char> done(n, 0);
  std::vector<int> cycle;
  for (std::size_t s = 0; s < n; ++s) {
    if (done[s]) continue;
    cycle.clear();
    for (int x = static_cast<int>(s); !done[static_cast<std::size_t>(x)];
         x = perm[static_cast<std::size_t>(x)]) {
      done[static_cast<std::size_t>(x)] = 1;
      cycle.push_back(x);
    }
    const auto len = static_cast<std::int64_t>(cycle.size());
    const std::int64_t shift = numth::mod(e, len);
    for (std::int64_t i = 0; i < len; ++i)
      out[static_cast<std::size_t>(cycle[static_cast<std::size_t>(i)])] =
          cycle[static_cast<std::size_t>((i + shift) % len)];
  }
  return out;
}

namespace detail {

SkewMorphism assemble(int n, std::vector<int> images, std::vector<int> powers) {
  auto data = std::make_shared<SkewMorphism::Data>();
  data->n = n;
  data->orbit = orbit_of(images, 1 % n);
  data->order = static_cast<int>(data->orbit.size());
  data->images = std::move(images);
  data->powers = std::move(powers);
  return SkewMorphism(std::move(data));
}

}  // namespace detail

SkewMorphism SkewMorphism::validate(int n, std::span<const int> images) {
  if (n < 1 || images.size() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::kNotAPermutation,
                "expected " + std::to_string(n) + " images, got " + std::to_string(images.size()));
  if (!is_permutation(images)) throw Error(ErrorCode::kNotAPermutation, format_images(images));
  if (images[0] != 0) throw Error(ErrorCode::kIdentityNotFixed, format_images(images));

  const auto un = static_cast<std::size_t>(n);
  const std::vector<int> orbit = orbit_of(images, 1 % n);
  const int order = static_cast<int>(orbit.size());
  std::vector<int> position(un, -1);
  for (std::size_t i = 0; i < orbit.size(); ++i)
    position[static_cast<std::size_t>(orbit[i])] = static_cast<int>(i);

  // phi(a + 1) - phi(a) = phi^pi(a)(1) pins pi(a) down modulo the orbit length.
  std::vector<int> powers(un);
  for (std::size_t a = 0; a < un; ++a) {
    const int diff = static_cast<int>(numth::mod(images[(a + 1) % un] - images[a], n));
    const int pos = position[static_cast<std::size_t>(diff)];
    if (pos < 0)
      throw Error(ErrorCode::kNotSkew, format_images(images) + ": phi(" + std::to_string(a + 1) +
                                           ") - phi(" + std::to_string(a) +
                                           ") is not in the orbit of 1");
    powers[a] = exponent_rep(pos, order);
  }

  // Full defining identity phi(a + b) = phi(a) + phi^pi(a)(b).
  std::map<int, std::vector<int>> power_tables;
  for (std::size_t a = 0; a < un; ++a) {
    auto it = power_tables.find(powers[a]);
    if (it == power_tables.end())
      it = power_tables.emplace(powers[a], permutation_power(images, powers[a])).first;
    const std::vector<int>& table = it->second;
    for (std::size_t b = 0; b < un; ++b) {
      const int lhs = images[(a + b) % un];
      const int rhs = (images[a] + table[b]) % n;
      if (lhs != rhs)
        throw Error(ErrorCode::kNotSkew, format_images(images) + ": identity fails at a=" +
                                             std::to_string(a) + ", b=" + std::to_string(b));
    }
  }
  return detail::assemble(n, std::vector<int>(images.begin(), images.end()), std::move(powers));
}

SkewMorphism SkewMorphism::identity(int n) {
  if (n < 1) throw Error(ErrorCode::kBadParameters, "modulus must be positive");
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
  return detail::assemble(n, std::move(images), std::vector<int>(static_cast<std::size_t>(n), 1));
}

SkewMorphism SkewMorphism::from_automorphism(int n, std::int64_t u) {
  if (n < 1) throw Error(ErrorCode::kBadParameters, "modulus must be positive");
  const std::int64_t unit = numth::mod(u, n);
  if (numth::gcd(unit, n) != 1)
    throw Error(ErrorCode::kNotAUnit,
                std::to_string(u) + " is not a unit modulo " + std::to_string(n));
  std::vector<int> images(static_cast<std::size_t>(n));
  for (std::int64_t x = 0; x < n; ++x) images[static_cast<std::size_t>(x)] = static_cast<int>(unit * x % n);
  return detail::assemble(n, std::move(images), std::vector<int>(static_cast<std::size_t>(n), 1));
}

int SkewMorphism::apply_power(std::int64_t e, int a) const {
  std::int64_t steps = numth::mod(e, order());
  int x = a;
  while (steps-- > 0) x = (*this)(x);
  return x;
}

std::vector<int> SkewMorphism::power_map(std::int64_t e) const {
  return permutation_power(images(), e);
}

int SkewMorphism::sigma(std::int64_t x, int y) const {
  const int ell = order();
  const std::vector<int> cycle = orbit_of(images(), y);
  const auto len = static_cast<std::int64_t>(cycle.size());
  std::int64_t full = 0;
  for (int v : cycle) full += power(v);
  std::int64_t partial = 0;
  for (std::int64_t i = 0; i < x % len; ++i) partial += power(cycle[static_cast<std::size_t>(i)]);
  const std::int64_t reps = (x / len) % ell;
  return static_cast<int>(numth::mod(reps * (full % ell) + partial, ell));
}

SkewMorphism::Kernel SkewMorphism::kernel() const {
  int size = 0;
  for (int p : powers())
    if (p == 1) ++size;
  return {modulus() / size, size};
}

bool SkewMorphism::is_automorphism() const {
  return std::all_of(powers().begin(), powers().end(), [](int p) { return p == 1; });
}

bool SkewMorphism::power_hits_order() const {
  if (order() == 1) return false;
  return std::any_of(powers().begin(), powers().end(), [&](int p) { return p == order(); });
}

std::string SkewMorphism::to_string() const { return format_images(images()); }

bool operator==(const SkewMorphism& a, const SkewMorphism& b) {
  if (a.data_ == b.data_) return true;
  return a.modulus() == b.modulus() &&
         std::equal(a.images().begin(), a.images().end(), b.images().begin());
}

std::strong_ordering operator<=>(const SkewMorphism& a, const SkewMorphism& b) {
  if (auto c = a.modulus() <=> b.modulus(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.images().begin(), a.images().end(),
                                                b.images().begin(), b.images().end());
}

std::string format_images(std::span<const int> images) {
  std::string out;
  out.reserve(images.size() * 4);
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(images[i]);
  }
  return out;
}

std::vector<int> parse_images(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) throw Error(ErrorCode::kFormatError, "empty image list");
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view field =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || value < 0)
      throw Error(ErrorCode::kFormatError, "bad image entry '" + std::string(field) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace skewmorph

#include "skewmorph/census.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <string>
#include <thread>

#include "skewmorph/construct.hpp"
#include "skewmorph/error.hpp"
#include "skewmorph/numth.hpp"

namespace skewmorph {

namespace {

std::size_t idx(std::int64_t x) { return static_cast<std::size_t>(x); }

std::uint64_t hash_images(std::span<const int> images) {
  std::uint64_t h = 1469598103934665603ULL;
  for (int v : images) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return h;
}

std::int64_t derived_key(int order, int derived_index) {
  return (static_cast<std::int64_t>(order) << 32) | static_cast<std::uint32_t>(derived_index);
}

const std::vector<int> kNoIndices;

// phi^m taken modulo d, if that is a well-defined map of Z_d.
std::optional<std::vector<int>> projection(const std::vector<int>& map, int d) {
  std::vector<int> out(idx(d), -1);
  for (std::size_t x = 0; x < map.size(); ++x) {
    int& slot = out[x % idx(d)];
    const int image = map[x] % d;
    if (slot == -1)
      slot = image;
    else if (slot != image)
      return std::nullopt;
  }
  return out;
}

}  // namespace

std::optional<int> Stratum::find(std::span<const int> images) const {
  if (images.size() != idx(n_)) return std::nullopt;
  const auto [first, last] = by_hash_.equal_range(hash_images(images));
  for (auto it = first; it != last; ++it) {
    const auto stored = entries_[idx(it->second)].phi.images();
    if (std::equal(stored.begin(), stored.end(), images.begin())) return it->second;
  }
  return std::nullopt;
}

std::span<const int> Stratum::with_order(int order) const {
  const auto it = by_order_.find(order);
  return it == by_order_.end() ? std::span<const int>(kNoIndices) : std::span<const int>(it->second);
}

std::span<const int> Stratum::with_derived(int order, int derived_index) const {
  const auto it = by_derived_.find(derived_key(order, derived_index));
  return it == by_derived_.end() ? std::span<const int>(kNoIndices) : std::span<const int>(it->second);
}

void Stratum::add(CensusEntry entry) {
  const int index = static_cast<int>(entries_.size());
  by_hash_.emplace(hash_images(entry.phi.images()), index);
  std::vector<int>& same_order = by_order_[entry.phi.order()];
  const auto pos = std::upper_bound(same_order.begin(), same_order.end(), index,
                                    [&](int a, int b) {
                                      const SkewMorphism& pa = a == index ? entry.phi : entries_[idx(a)].phi;
                                      const SkewMorphism& pb = b == index ? entry.phi : entries_[idx(b)].phi;
                                      return pa < pb;
                                    });
  same_order.insert(pos, index);
  entries_.push_back(std::move(entry));
}

void Stratum::finalize() {
  std::sort(entries_.begin(), entries_.end(),
            [](const CensusEntry& a, const CensusEntry& b) { return a.phi < b.phi; });
  by_hash_.clear();
  by_order_.clear();
  by_derived_.clear();
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const CensusEntry& e = entries_[i];
    const int index = static_cast<int>(i);
    by_hash_.emplace(hash_images(e.phi.images()), index);
    by_order_[e.phi.order()].push_back(index);
    by_derived_[derived_key(e.phi.order(), e.derived_index)].push_back(index);
  }
  complete_ = true;
}

// Grows a census one modulus at a time.
class CensusBuilder {
public:
  explicit CensusBuilder(Census& census) : census_(census) {}

  Stratum& open(int n) {
    if (n != census_.max_n() + 1)
      throw Error(ErrorCode::kInternal, "strata must be opened in order");
    census_.strata_.emplace_back(n);
    return census_.strata_.back();
  }

  Stratum& top() { return census_.strata_.back(); }

  void add(CensusEntry entry) {
    Stratum& s = top();
    if (s.find(entry.phi.images()))
      throw Error(ErrorCode::kInternal, "duplicate skew morphism " + entry.phi.to_string());
    s.add(std::move(entry));
  }

  void finalize() {
    Stratum& s = top();
    s.finalize();
    const int n = s.modulus();
    for (CensusEntry& e : s.entries_) {
      const int m = e.auto_order;
      if (e.complexity >= 2 && e.complexity % 2 == 0) {
        const SkewMorphism restricted = restrict_to_subgroup(e.phi, m);
        const auto found = census_.stratum(n / m).find(restricted.images());
        if (!found)
          throw Error(ErrorCode::kInternal, "restriction of " + e.phi.to_string() + " not in census");
        e.restrict_index = *found;
      } else if (e.complexity % 2 == 1) {
        const std::vector<int> power = e.phi.power_map(m);
        for (std::int64_t d : numth::divisors(n)) {
          const auto projected = projection(power, static_cast<int>(d));
          if (!projected) continue;
          const auto found = census_.stratum(static_cast<int>(d)).find(*projected);
          if (found) e.power_projections.emplace_back(static_cast<int>(d), *found);
        }
      }
    }
  }

private:
  Census& census_;
};

const Stratum& Census::stratum(int n) const {
  if (n < 1 || n > max_n())
    throw Error(ErrorCode::kIncompleteCensus, "census does not contain Z_" + std::to_string(n));
  return strata_[idx(n - 1)];
}

std::vector<SkewMorphism> Census::morphisms(int n) const {
  std::vector<SkewMorphism> out;
  for (const CensusEntry& e : stratum(n).entries()) out.push_back(e.phi);
  return out;
}

std::size_t Census::size() const {
  std::size_t total = 0;
  for (const Stratum& s : strata_) total += s.size();
  return total;
}

bool operator==(const Census& a, const Census& b) {
  if (a.max_n() != b.max_n()) return false;
  for (int n = 1; n <= a.max_n(); ++n) {
    const auto ea = a.stratum(n).entries();
    const auto eb = b.stratum(n).entries();
    if (ea.size() != eb.size()) return false;
    for (std::size_t i = 0; i < ea.size(); ++i)
      if (ea[i].phi != eb[i].phi) return false;
  }
  return true;
}

namespace {

using IndexedVisitor = std::function<void(const ReductionTriple&, int alpha_index)>;

void require_below(const Census& census, int n) {
  for (int k = 1; k < n; ++k)
    if (!census.covers(k))
      throw Error(ErrorCode::kIncompleteCensus, "census lacks the complete stratum of Z_" + std::to_string(k));
}

void visit_h_values(ReductionTriple& t, const CensusEntry& alpha, bool restrict_h, int step,
                    int offset, int alpha_index, const IndexedVisitor& visit) {
  const int n = t.n;
  const int alpha_order = alpha.phi.order();
  const int wanted = alpha.phi.power(1) % alpha_order;
  for (int h = offset; h < n; h += step) {
    if (restrict_h && h % alpha_order != wanted) continue;
    t.h = h;
    visit(t, alpha_index);
  }
}

void odd_candidates(const Census& census, int n, int ell, const CandidateFilter& filter,
                    const IndexedVisitor& visit) {
  require_below(census, n);
  if (n > census.max_n())
    throw Error(ErrorCode::kIncompleteCensus, "census lacks Z_" + std::to_string(n));
  if (ell < 2 || ell >= n) return;
  if (static_cast<std::int64_t>(n) * numth::totient(n) % ell != 0) return;
  const Stratum& alphas = census.stratum(ell);
  const Stratum& betas = census.stratum(n);
  for (std::int64_t m64 : numth::divisors(ell)) {
    const int m = static_cast<int>(m64);
    if (m < 2) continue;
    const int d = ell / m;
    // restriction index -> alpha indices
    std::map<int, std::vector<int>> by_restriction;
    std::vector<int> all;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      const CensusEntry& a = alphas[i];
      if (a.complexity < 2 || a.complexity % 2 != 0 || a.auto_order != m) continue;
      if (n % a.phi.order() != 0) continue;
      by_restriction[a.restrict_index].push_back(static_cast<int>(i));
      all.push_back(static_cast<int>(i));
    }
    if (all.empty()) continue;
    for (int b : betas.with_order(d)) {
      const CensusEntry& beta = betas[idx(b)];
      const std::vector<int>* list = &all;
      if (filter.require_o2) {
        const auto it = by_restriction.find(beta.derived_index);
        if (it == by_restriction.end()) continue;
        list = &it->second;
      }
      for (int a : *list) {
        ReductionTriple t{.parity = Parity::kOdd, .n = n, .order = ell, .auto_order = m, .h = 0,
                          .alpha = alphas[idx(a)].phi, .beta = beta.phi};
        visit_h_values(t, alphas[idx(a)], filter.restrict_h, 1, 0, a, visit);
      }
    }
  }
}

void even_candidates(const Census& census, int n, int ell, const CandidateFilter& filter,
                     const IndexedVisitor& visit) {
  require_below(census, n);
  if (ell < 2 || ell >= n) return;
  if (static_cast<std::int64_t>(n) * numth::totient(n) % ell != 0) return;
  const Stratum& alphas = census.stratum(ell);
  for (std::int64_t m64 : numth::divisors(n)) {
    const int m = static_cast<int>(m64);
    if (m < 2 || m == n) continue;
    const Stratum& betas = census.stratum(n / m);
    std::vector<std::pair<int, int>> pairs;  // (beta index, alpha index)
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      const CensusEntry& a = alphas[i];
      if (a.complexity % 2 != 1 || a.auto_order != m || n % a.phi.order() != 0) continue;
      const int ai = static_cast<int>(i);
      if (filter.require_e2) {
        for (const auto& [d, j] : a.power_projections)
          for (int b : betas.with_derived(d, j)) pairs.emplace_back(b, ai);
      } else {
        for (std::int64_t d : numth::divisors(ell))
          for (int b : betas.with_order(static_cast<int>(d))) pairs.emplace_back(b, ai);
      }
    }
    std::sort(pairs.begin(), pairs.end());
    for (const auto& [b, a] : pairs) {
      ReductionTriple t{.parity = Parity::kEven, .n = n, .order = ell, .auto_order = m, .h = 0,
                        .alpha = alphas[idx(a)].phi, .beta = betas[idx(b)].phi};
      visit_h_values(t, alphas[idx(a)], filter.restrict_h, m, 1 % m, a, visit);
    }
  }
}

}  // namespace

void for_each_candidate_odd(const Census& census, int n, int ell, const CandidateVisitor& visit,
                            const CandidateFilter& filter) {
  odd_candidates(census, n, ell, filter, [&](const ReductionTriple& t, int) { visit(t); });
}

void for_each_candidate_even(const Census& census, int n, int ell, const CandidateVisitor& visit,
                             const CandidateFilter& filter) {
  even_candidates(census, n, ell, filter, [&](const ReductionTriple& t, int) { visit(t); });
}

std::vector<ReductionTriple> candidates_odd(const Census& census, int n, int ell,
                                            const CandidateFilter& filter) {
  std::vector<ReductionTriple> out;
  for_each_candidate_odd(census, n, ell, [&](const ReductionTriple& t) { out.push_back(t); }, filter);
  return out;
}

std::vector<ReductionTriple> candidates_even(const Census& census, int n, int ell,
                                             const CandidateFilter& filter) {
  std::vector<ReductionTriple> out;
  for_each_candidate_even(census, n, ell, [&](const ReductionTriple& t) { out.push_back(t); }, filter);
  return out;
}

namespace {

CensusEntry automorphism_entry(const SkewMorphism& phi) {
  CensusEntry e{.phi = phi};
  e.kernel_size = phi.modulus();
  e.derived_index = 0;  // the identity is first in every stratum
  if (phi.is_identity()) {
    e.complexity = 0;
    e.auto_order = phi.modulus();
  } else {
    e.complexity = 1;
    e.auto_order = phi.order();
  }
  return e;
}

struct Pending {
  ReductionTriple triple;
  int alpha_index;
};

}  // namespace

Census Census::generate(int max_n, const GenerateOptions& options) {
  if (max_n < 1) throw Error(ErrorCode::kBadParameters, "census bound must be positive");
  Census census;
  CensusBuilder builder(census);
  const BuildOptions build_options{.mode = BuildMode::kFirstFailure, .check_preconditions = false};
  const int threads = std::max(1, options.threads);

  for (int n = 1; n <= max_n; ++n) {
    builder.open(n);
    for (const SkewMorphism& phi : automorphisms(n)) builder.add(automorphism_entry(phi));

    const std::int64_t bound = static_cast<std::int64_t>(n) * numth::totient(n);
    for (int ell = 3; ell < n; ++ell) {
      if (bound % ell != 0) continue;
      std::vector<Pending> pending;
      const IndexedVisitor collect = [&](const ReductionTriple& t, int a) { pending.push_back({t, a}); };
      odd_candidates(census, n, ell, {}, collect);
      even_candidates(census, n, ell, {}, collect);

      std::vector<std::optional<SkewMorphism>> results(pending.size());
      const auto work = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < pending.size(); i += stride)
          results[i] = build(pending[i].triple, build_options).result;
      };
      if (threads == 1 || pending.size() < 64) {
        work(0, 1);
      } else {
        std::vector<std::exception_ptr> errors(idx(threads));
        {
          std::vector<std::jthread> pool;
          for (int w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
              try {
                work(idx(w), idx(threads));
              } catch (...) {
                errors[idx(w)] = std::current_exception();
              }
            });
        }
        for (const auto& err : errors)
          if (err) std::rethrow_exception(err);
      }

      const Stratum& alphas = census.stratum(ell);
      for (std::size_t i = 0; i < pending.size(); ++i) {
        if (!results[i]) continue;
        const SkewMorphism& phi = *results[i];
        const CensusEntry& alpha = alphas[idx(pending[i].alpha_index)];
        if (options.validate_results) {
          const SkewMorphism checked = SkewMorphism::validate(n, phi.images());
          if (!std::equal(checked.powers().begin(), checked.powers().end(), phi.powers().begin()) ||
              !(reduction(checked) == pending[i].triple))
            throw Error(ErrorCode::kInternal, "accepted candidate " + phi.to_string() +
                                                  " does not reduce to its triple");
        }
        CensusEntry e{.phi = phi};
        e.complexity = alpha.complexity + 1;
        e.auto_order = alpha.auto_order;
        e.kernel_size = n / alpha.phi.order();
        e.derived_index = pending[i].alpha_index;
        builder.add(std::move(e));
      }
    }
    builder.finalize();
    if (options.progress) options.progress(n, census.stratum(n).size());
  }
  return census;
}

Census Census::from_lists(std::vector<std::vector<SkewMorphism>> lists) {
  Census census;
  CensusBuilder builder(census);
  for (std::size_t k = 0; k < lists.size(); ++k) {
    const int n = static_cast<int>(k) + 1;
    builder.open(n);
    std::sort(lists[k].begin(), lists[k].end());
    for (std::size_t i = 0; i < lists[k].size(); ++i) {
      const SkewMorphism& phi = lists[k][i];
      if (phi.modulus() != n)
        throw Error(ErrorCode::kFormatError, "morphism " + phi.to_string() + " listed under Z_" + std::to_string(n));
      if (i > 0 && lists[k][i - 1] == phi)
        throw Error(ErrorCode::kFormatError, "duplicate morphism " + phi.to_string());
      const ComplexityProfile profile = complexity(phi);
      CensusEntry e{.phi = phi};
      e.complexity = profile.complexity;
      e.auto_order = profile.auto_order;
      e.kernel_size = phi.kernel().size;
      if (phi.order() == n) {
        e.derived_index = 0;
      } else {
        const SkewMorphism d = derived(phi);
        const auto found = census.stratum(phi.order()).find(d.images());
        if (!found)
          throw Error(ErrorCode::kFormatError, "derived skew morphism of " + phi.to_string() + " is missing");
        e.derived_index = *found;
      }
      builder.add(std::move(e));
    }
    builder.finalize();
  }
  return census;
}

}  // namespace skewmorph

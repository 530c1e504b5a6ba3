#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skewmorph/reduce.hpp"
#include "skewmorph/skew_morphism.hpp"

namespace skewmorph {

/// A stored skew morphism with the data the recursive construction queries.
struct CensusEntry {
  SkewMorphism phi;
  int complexity = 0;
  int auto_order = 1;
  int kernel_size = 1;
  /// Index of phi' within the stratum of Z_{ord(phi)}.
  int derived_index = 0;
  /// Even complexity >= 2: index of phi restricted to <m> within the stratum
  /// of Z_{n/m}; otherwise -1.
  int restrict_index = -1;
  /// Odd complexity: pairs (d, index) such that phi^m taken modulo d is the
  /// skew morphism at `index` of the stratum of Z_d, for every divisor d of n
  /// where that projection exists.
  std::vector<std::pair<int, int>> power_projections{};
};

/// All known skew morphisms of one Z_n, sorted by images once complete.
class Stratum {
public:
  explicit Stratum(int n) : n_(n) {}

  int modulus() const { return n_; }
  bool complete() const { return complete_; }
  std::size_t size() const { return entries_.size(); }
  const CensusEntry& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const CensusEntry> entries() const { return entries_; }

  std::optional<int> find(std::span<const int> images) const;

  /// Indices of entries of the given order, in image order.
  std::span<const int> with_order(int order) const;

  /// Indices of entries of the given order whose derived skew morphism is
  /// entry `derived_index` of the stratum of Z_order, in image order.
  std::span<const int> with_derived(int order, int derived_index) const;

private:
  friend class Census;
  friend class CensusBuilder;

  void add(CensusEntry entry);
  void finalize();

  int n_;
  bool complete_ = false;
  std::vector<CensusEntry> entries_;
  std::unordered_multimap<std::uint64_t, int> by_hash_;
  std::unordered_map<int, std::vector<int>> by_order_;
  std::unordered_map<std::int64_t, std::vector<int>> by_derived_;
};

struct GenerateOptions {
  /// Worker threads used to build the candidates of one (n, order) step.
  int threads = 1;
  /// Re-validate every accepted morphism against the defining identity and
  /// check that it reduces back to its triple. Slow; meant for testing.
  bool validate_results = false;
  /// Called after each modulus is complete.
  std::function<void(int n, std::size_t count)> progress{};
};

/// Complete lists of skew morphisms of Z_1, ..., Z_max_n. The top stratum may
/// be partial while the census is being generated.
class Census {
public:
  Census() = default;

  /// Recursive census of all skew morphisms of Z_n for n <= max_n.
  static Census generate(int max_n, const GenerateOptions& options = {});

  /// Builds a census from complete morphism lists for n = 1, ..., k (index
  /// n - 1 holds Z_n). The lists are sorted and indexed; duplicates throw
  /// Error(kFormatError).
  static Census from_lists(std::vector<std::vector<SkewMorphism>> lists);

  int max_n() const { return static_cast<int>(strata_.size()); }
  bool covers(int n) const { return n >= 1 && n <= max_n() && strata_[static_cast<std::size_t>(n - 1)].complete(); }

  /// Throws Error(kIncompleteCensus) if Z_n is not present.
  const Stratum& stratum(int n) const;

  std::vector<SkewMorphism> morphisms(int n) const;

  /// Total number of stored morphisms.
  std::size_t size() const;

  friend bool operator==(const Census& a, const Census& b);

private:
  friend class CensusBuilder;
  std::vector<Stratum> strata_;
};

/// Restrictions applied while enumerating candidate triples. The defaults give
/// exactly the candidates of the census algorithm; switching a filter off
/// yields a superset used to probe the role of the individual conditions.
struct CandidateFilter {
  /// Odd branch: beta' must agree with alpha on <m> (O2).
  bool require_o2 = true;
  /// Even branch: beta' must agree with alpha^m modulo ord(beta) (E2).
  bool require_e2 = true;
  /// h must satisfy h = pi_alpha(1) modulo ord(alpha).
  bool restrict_h = true;
};

using CandidateVisitor = std::function<void(const ReductionTriple&)>;

/// Every odd-parity triple for skew morphisms of Z_n of order ell, ordered by
/// (m, beta, alpha, h). Needs Z_1, ..., Z_(n-1) complete and Z_n present with
/// all morphisms of order below ell; throws Error(kIncompleteCensus) otherwise.
void for_each_candidate_odd(const Census& census, int n, int ell, const CandidateVisitor& visit,
                            const CandidateFilter& filter = {});

/// Even-parity counterpart; needs Z_1, ..., Z_(n-1) complete.
void for_each_candidate_even(const Census& census, int n, int ell, const CandidateVisitor& visit,
                             const CandidateFilter& filter = {});

std::vector<ReductionTriple> candidates_odd(const Census& census, int n, int ell,
                                            const CandidateFilter& filter = {});
std::vector<ReductionTriple> candidates_even(const Census& census, int n, int ell,
                                             const CandidateFilter& filter = {});

}  // namespace skewmorph

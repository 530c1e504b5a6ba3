#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "skewmorph/skew_morphism.hpp"

// Exhaustive search for all skew morphisms of Z_n, independent of the
// recursive construction. Desk scale only.
namespace skewmorph::oracle {

inline constexpr int kDefaultLimit = 14;

/// kDefaultLimit, or the value of SKEWMORPH_ORACLE_LIMIT when set.
int default_limit();

struct Options {
  /// Maximum number of search nodes; exceeding it throws Error(kBudgetExceeded).
  std::optional<std::uint64_t> budget;
  /// Largest n accepted; 0 means default_limit().
  int limit = 0;
  /// Worker threads splitting the search on the choice of phi(1).
  int threads = 1;
};

/// All skew morphisms of Z_n in lexicographic image order.
/// Throws Error(kOracleLimit) for n above the limit.
std::vector<SkewMorphism> enumerate_all(int n, const Options& options = {});

/// Number of search nodes the last enumerate_all on this thread visited.
std::uint64_t last_node_count();

bool is_skew(int n, std::span<const int> images);

}  // namespace skewmorph::oracle

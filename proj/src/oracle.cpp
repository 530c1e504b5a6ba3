#include "skewmorph/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <string>
#include <thread>

#include "skewmorph/error.hpp"
#include "skewmorph/numth.hpp"

namespace skewmorph::oracle {

namespace {

thread_local std::uint64_t g_last_nodes = 0;

// Depth-first assignment of phi(1), phi(2), ..., phi(n-1).
//
// Pruning rests on two facts: phi(a+1) - phi(a) = phi^pi(a)(1) lies in the
// cycle through 1, and that cycle has length ord(phi) with ord(phi) < n and
// ord(phi) | n phi(n). Once the forward path from 1 reaches d = phi(a+1) -
// phi(a) after p steps, pi(a) = p modulo ord(phi), so phi(a + b) = phi(a) +
// phi^p(b) either contradicts the partial assignment or forces a new value,
// which is propagated. Every completed permutation still goes through
// SkewMorphism::validate.
class Search {
public:
  Search(int n, std::uint64_t budget, std::atomic<std::uint64_t>& nodes)
      : n_(n),
        budget_(budget),
        nodes_(nodes),
        image_(static_cast<std::size_t>(n), -1),
        preimage_(static_cast<std::size_t>(n), -1),
        path_pos_(static_cast<std::size_t>(n), -1) {
    const std::int64_t bound = static_cast<std::int64_t>(n) * numth::totient(n);
    allowed_order_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int ell = 1; ell < n; ++ell) {
      if (bound % ell != 0) continue;
      allowed_order_[static_cast<std::size_t>(ell)] = 1;
      max_order_ = ell;
    }
    assign(0, 0);
  }

  void run_from(int first_image, std::vector<SkewMorphism>& out) {
    const std::size_t mark = trail_.size();
    if (try_assign(1, first_image)) descend(out);
    undo_to(mark);
  }

private:
  int n_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& nodes_;
  std::vector<int> image_;
  std::vector<int> preimage_;
  std::vector<int> path_pos_;
  std::vector<char> allowed_order_;
  std::vector<int> trail_;
  int max_order_ = 1;

  int at(int x) const { return image_[static_cast<std::size_t>(x)]; }
  bool taken(int v) const { return preimage_[static_cast<std::size_t>(v)] != -1; }

  void assign(int a, int v) {
    image_[static_cast<std::size_t>(a)] = v;
    preimage_[static_cast<std::size_t>(v)] = a;
  }

  void record(int a, int v) {
    assign(a, v);
    trail_.push_back(a);
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const int a = trail_.back();
      trail_.pop_back();
      preimage_[static_cast<std::size_t>(at(a))] = -1;
      image_[static_cast<std::size_t>(a)] = -1;
    }
  }

  // Assigns and propagates; on failure the caller undoes to its own mark.
  bool try_assign(int a, int v) {
    if (taken(v)) return false;
    record(a, v);
    return propagate();
  }

  void descend(std::vector<SkewMorphism>& out) {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_)
      throw Error(ErrorCode::kBudgetExceeded,
                  "oracle search budget exhausted at n=" + std::to_string(n_));
    int a = open_end();
    if (a == -1) {
      a = 1;
      while (a < n_ && at(a) != -1) ++a;
    }
    if (a == n_) {
      try {
        out.push_back(SkewMorphism::validate(n_, image_));
      } catch (const Error&) {
      }
      return;
    }
    for (int v = 1; v < n_; ++v) {
      if (taken(v)) continue;
      const std::size_t mark = trail_.size();
      if (try_assign(a, v)) descend(out);
      undo_to(mark);
    }
  }

  // Last element of the forward path from 1 if that path has not closed.
  int open_end() const {
    int x = 1;
    for (int steps = 0; steps < n_; ++steps) {
      const int next = at(x);
      if (next == -1) return x;
      if (next == 1) return -1;
      x = next;
    }
    return -1;
  }

  // Recomputes the forward path from 1; returns false if its shape already
  // rules out every admissible order.
  bool trace_path(bool& closed) {
    std::fill(path_pos_.begin(), path_pos_.end(), -1);
    int len = 0;
    closed = false;
    for (int x = 1;;) {
      path_pos_[static_cast<std::size_t>(x)] = len++;
      const int next = at(x);
      if (next == -1) break;
      if (next == 1) {
        closed = true;
        break;
      }
      x = next;
    }
    if (closed) return allowed_order_[static_cast<std::size_t>(len)] != 0;
    return len <= max_order_;
  }

  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      bool closed = false;
      if (!trace_path(closed)) return false;
      for (int a = 0; a < n_; ++a) {
        const int next = (a + 1) % n_;
        if (at(a) == -1 || at(next) == -1) continue;
        const int diff = static_cast<int>(numth::mod(at(next) - at(a), n_));
        const int p = path_pos_[static_cast<std::size_t>(diff)];
        if (p < 0) {
          if (closed || on_foreign_cycle(diff)) return false;
          continue;
        }
        const std::size_t before = trail_.size();
        if (!apply_row(a, p)) return false;
        if (trail_.size() != before) {
          changed = true;
          break;
        }
      }
    }
    return true;
  }

  bool on_foreign_cycle(int start) const {
    for (int x = at(start), steps = 0; x != -1 && steps < n_; x = at(x), ++steps)
      if (x == start) return true;
    return false;
  }

  // phi(a + b) = phi(a) + phi^p(b) for every b with phi^p(b) known.
  bool apply_row(int a, int p) {
    for (int b = 0; b < n_; ++b) {
      int x = b;
      for (int s = 0; s < p && x != -1; ++s) x = at(x);
      if (x == -1) continue;
      const int forced = (at(a) + x) % n_;
      const int target = (a + b) % n_;
      if (at(target) != -1) {
        if (at(target) != forced) return false;
      } else {
        if (taken(forced)) return false;
        record(target, forced);
      }
    }
    return true;
  }
};

}  // namespace

int default_limit() {
  if (const char* env = std::getenv("SKEWMORPH_ORACLE_LIMIT")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultLimit;
}

std::uint64_t last_node_count() { return g_last_nodes; }

std::vector<SkewMorphism> enumerate_all(int n, const Options& options) {
  const int limit = options.limit > 0 ? options.limit : default_limit();
  if (n < 1) throw Error(ErrorCode::kBadParameters, "n must be positive");
  if (n > limit)
    throw Error(ErrorCode::kOracleLimit,
                "n=" + std::to_string(n) + " exceeds the oracle limit " + std::to_string(limit));
  if (n <= 2) return {SkewMorphism::identity(n)};

  const std::uint64_t budget = options.budget.value_or(UINT64_MAX);
  std::atomic<std::uint64_t> nodes{0};
  std::vector<SkewMorphism> result;
  std::mutex result_mutex;
  std::atomic<int> next_branch{1};
  std::exception_ptr failure;

  auto worker = [&] {
    std::vector<SkewMorphism> local;
    try {
      Search search(n, budget, nodes);
      for (int v = next_branch++; v < n; v = next_branch++) search.run_from(v, local);
    } catch (...) {
      std::lock_guard lock(result_mutex);
      if (!failure) failure = std::current_exception();
      next_branch = n;
    }
    std::lock_guard lock(result_mutex);
    result.insert(result.end(), local.begin(), local.end());
  };

  const int threads = std::clamp(options.threads, 1, n - 1);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  g_last_nodes = nodes.load();
  if (failure) std::rethrow_exception(failure);
  std::sort(result.begin(), result.end());
  return result;
}

bool is_skew(int n, std::span<const int> images) {
  try {
    SkewMorphism::validate(n, images);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace skewmorph::oracle

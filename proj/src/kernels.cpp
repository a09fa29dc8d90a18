#include "arrowlab/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace arrowlab {

bool is_proper_coloring(const Hypergraph& g, std::span<const int> coloring) {
  for (const auto& e : g.edges) {
    const int c = coloring[e.front()];
    bool mono = true;
    for (std::size_t i = 1; i < e.size() && mono; ++i) mono = coloring[e[i]] == c;
    if (mono) return false;
  }
  return true;
}

std::uint64_t canonical_coloring_count(int n, int k) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (n == 0) return 1;
  // s[j] = S(i, j), capped.
  std::vector<std::uint64_t> s(k + 1, 0);
  s[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      const std::uint64_t a = s[j];
      const std::uint64_t b = s[j - 1];
      std::uint64_t t;
      if (__builtin_mul_overflow(a, static_cast<std::uint64_t>(j), &t) ||
          __builtin_add_overflow(t, b, &t)) {
        t = kMax;
      }
      s[j] = t;
    }
    s[0] = 0;
  }
  std::uint64_t total = 0;
  for (int j = 1; j <= k; ++j) {
    if (__builtin_add_overflow(total, s[j], &total)) return kMax;
  }
  return total;
}

namespace {

// Restricted growth strings over [0, k), positions < `fixed` frozen.
class RgsCursor {
 public:
  RgsCursor(int n, int k, std::vector<int> prefix) : n_(n), k_(k), fixed_(prefix.size()) {
    c_ = std::move(prefix);
    c_.resize(n, 0);
    top_.assign(n, 0);
    for (int i = 0; i < n; ++i) top_[i] = std::max(i ? top_[i - 1] : 0, c_[i]);
  }

  const std::vector<int>& coloring() const { return c_; }

  bool next() {
    for (int i = n_ - 1; i >= std::max<int>(static_cast<int>(fixed_), 1); --i) {
      if (c_[i] < k_ - 1 && c_[i] <= top_[i - 1]) {
        ++c_[i];
        top_[i] = std::max(top_[i - 1], c_[i]);
        for (int j = i + 1; j < n_; ++j) {
          c_[j] = 0;
          top_[j] = top_[i];
        }
        return true;
      }
    }
    return false;
  }

 private:
  int n_, k_;
  std::size_t fixed_;
  std::vector<int> c_, top_;
};

KernelResult scan(const Hypergraph& g, int k, std::vector<int> prefix) {
  KernelResult r;
  RgsCursor cur(g.vertices, k, std::move(prefix));
  do {
    ++r.explored;
    if (is_proper_coloring(g, cur.coloring())) {
      r.status = KernelStatus::found;
      r.coloring = cur.coloring();
      return r;
    }
  } while (cur.next());
  r.status = KernelStatus::exhausted;
  return r;
}

void check_k(int k) {
  if (k < 1) throw std::invalid_argument("color count must be positive");
}

std::vector<std::vector<int>> prefixes(int k, int depth) {
  std::vector<std::vector<int>> out;
  RgsCursor cur(depth, k, {});
  do out.push_back(cur.coloring());
  while (cur.next());
  return out;
}

}  // namespace

KernelResult exhaustive_serial(const Hypergraph& g, int k, std::uint64_t budget) {
  check_k(k);
  if (canonical_coloring_count(g.vertices, k) > budget) {
    return {KernelStatus::budget_exceeded, {}, 0};
  }
  return scan(g, k, {});
}

KernelResult exhaustive_parallel(const Hypergraph& g, int k, std::uint64_t budget, int jobs) {
  check_k(k);
  if (canonical_coloring_count(g.vertices, k) > budget) {
    return {KernelStatus::budget_exceeded, {}, 0};
  }
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  if (threads == 1 || g.vertices < 2) return scan(g, k, {});

  int depth = 1;
  while (depth < g.vertices &&
         canonical_coloring_count(depth, k) < static_cast<std::uint64_t>(threads) * 16) {
    ++depth;
  }
  const auto work = prefixes(k, depth);
  const auto count = static_cast<std::int64_t>(work.size());
  std::vector<KernelResult> partial(work.size());
  std::atomic<std::int64_t> best{count};

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t p = 0; p < count; ++p) {
    if (p > best.load(std::memory_order_relaxed)) continue;
    partial[p] = scan(g, k, work[p]);
    if (partial[p].status == KernelStatus::found) {
      auto cur = best.load();
      while (p < cur && !best.compare_exchange_weak(cur, p)) {
      }
    }
  }

  KernelResult r;
  const auto stop = best.load();
  for (std::int64_t p = 0; p < std::min(stop + 1, count); ++p) r.explored += partial[p].explored;
  if (stop < count) {
    r.status = KernelStatus::found;
    r.coloring = std::move(partial[stop].coloring);
  } else {
    r.status = KernelStatus::exhausted;
  }
  return r;
}

namespace {

class Backtracker {
 public:
  Backtracker(const Hypergraph& g, int k, const BacktrackOptions& opts)
      : g_(g), k_(k), opts_(opts) {
    const int n = g.vertices;
    incident_.resize(n);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      for (int v : g.edges[e]) incident_[v].push_back(static_cast<int>(e));
    }
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return incident_[a].size() > incident_[b].size();
    });
    domain_.assign(n, k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1);
    color_.assign(n, -1);
    uncolored_.resize(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      uncolored_[e] = static_cast<int>(g.edges[e].size());
    }
    counts_.assign(g.edges.size() * k, 0);
  }

  KernelResult run() {
    KernelResult r;
    const bool found = g_.vertices == 0 ? g_.edges.empty() : dfs(0, 0);
    r.explored = nodes_;
    if (found) {
      r.status = KernelStatus::found;
      r.coloring = canonical(color_);
    } else {
      r.status = aborted_ ? KernelStatus::budget_exceeded : KernelStatus::exhausted;
    }
    return r;
  }

 private:
  struct Removal {
    int vertex;
    std::uint64_t bit;
  };

  static std::vector<int> canonical(const std::vector<int>& c) {
    std::vector<int> rename(64, -1), out(c.size());
    int next = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (rename[c[i]] < 0) rename[c[i]] = next++;
      out[i] = rename[c[i]];
    }
    return out;
  }

  int pick() const {
    int best = -1;
    int best_size = 65;
    for (int v : order_) {
      if (color_[v] >= 0) continue;
      const int size = std::popcount(domain_[v]);
      if (size < best_size) {
        best = v;
        best_size = size;
      }
    }
    return best;
  }

  // Assigns v := c and propagates; false on conflict. Changes are recorded so
  // that undo() restores them even when false is returned.
  bool assign(int v, int c, std::size_t& touched) {
    color_[v] = c;
    bool ok = true;
    touched = 0;
    for (int e : incident_[v]) {
      ++touched;
      --uncolored_[e];
      const int same = ++counts_[e * k_ + c];
      const int size = static_cast<int>(g_.edges[e].size());
      if (uncolored_[e] == 0 && same == size) {
        ok = false;
        break;
      }
      if (uncolored_[e] == 1 && same == size - 1) {
        if (opts_.fault == PropagationFault::over_prune) {
          ok = false;
          break;
        }
        int u = -1;
        for (int x : g_.edges[e]) {
          if (color_[x] < 0) {
            u = x;
            break;
          }
        }
        const std::uint64_t bit = std::uint64_t{1} << c;
        if (domain_[u] & bit) {
          domain_[u] &= ~bit;
          trail_.push_back({u, bit});
          if (domain_[u] == 0) {
            ok = false;
            break;
          }
        }
      }
    }
    return ok;
  }

  void undo(int v, int c, std::size_t touched, std::size_t trail_mark) {
    for (std::size_t i = 0; i < touched; ++i) {
      const int e = incident_[v][i];
      ++uncolored_[e];
      --counts_[e * k_ + c];
    }
    while (trail_.size() > trail_mark) {
      domain_[trail_.back().vertex] |= trail_.back().bit;
      trail_.pop_back();
    }
    color_[v] = -1;
  }

  bool dfs(int depth, int used) {
    if (depth == g_.vertices) return true;
    const int v = pick();
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (!(domain_[v] & (std::uint64_t{1} << c))) continue;
      if (++nodes_ > opts_.node_budget) {
        aborted_ = true;
        return false;
      }
      const auto mark = trail_.size();
      std::size_t touched = 0;
      if (assign(v, c, touched) && dfs(depth + 1, std::max(used, c + 1))) return true;
      undo(v, c, touched, mark);
      if (aborted_) return false;
    }
    return false;
  }

  const Hypergraph& g_;
  int k_;
  BacktrackOptions opts_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> order_;
  std::vector<std::uint64_t> domain_;
  std::vector<int> color_;
  std::vector<int> uncolored_;
  std::vector<int> counts_;
  std::vector<Removal> trail_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

KernelResult backtrack_search(const Hypergraph& g, int k, const BacktrackOptions& opts) {
  check_k(k);
  if (k > 64) throw std::invalid_argument("backtracking supports at most 64 colors");
  return Backtracker(g, k, opts).run();
}

}  // namespace arrowlab

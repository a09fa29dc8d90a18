#pragma once

// Brute-force reference computations used to check the library. None of these
// go through FiniteCategory or the coloring kernels.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

inline std::uint64_t falling(int n, int m) {
  std::uint64_t r = 1;
  for (int i = 0; i < m; ++i) r *= static_cast<std::uint64_t>(n - i);
  return m > n ? 0 : r;
}

inline std::uint64_t binomial(int n, int m) {
  if (m < 0 || m > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= m; ++i) r = r * static_cast<std::uint64_t>(n - m + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Surjections [n] -> [m] by inclusion-exclusion.
inline std::uint64_t surjections(int n, int m) {
  std::int64_t total = 0;
  for (int j = 0; j <= m; ++j) {
    std::int64_t p = 1;
    for (int i = 0; i < n; ++i) p *= (m - j);
    total += ((j % 2) ? -1 : 1) * static_cast<std::int64_t>(binomial(m, j)) * p;
  }
  return static_cast<std::uint64_t>(total);
}

inline std::uint64_t factorial(int n) { return falling(n, n); }

// Subsets of {0..n-1} of size m as bitmasks, ascending.
inline std::vector<unsigned> subsets(int n, int m) {
  std::vector<unsigned> out;
  for (unsigned s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) == m) out.push_back(s);
  }
  return out;
}

// Every k-coloring of the a-subsets of an n-set has a b-subset whose a-subsets
// are monochromatic. Plain enumeration of all k^binom(n,a) colorings.
inline bool subset_arrow(int n, int b, int a, int k) {
  const auto items = subsets(n, a);
  const auto blocks = subsets(n, b);
  std::vector<std::vector<int>> edges;
  for (unsigned blk : blocks) {
    std::vector<int> e;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if ((items[i] & blk) == items[i]) e.push_back(static_cast<int>(i));
    }
    edges.push_back(e);
  }
  std::vector<int> color(items.size(), 0);
  while (true) {
    bool mono = false;
    for (const auto& e : edges) {
      if (std::all_of(e.begin(), e.end(), [&](int i) { return color[i] == color[e[0]]; })) {
        mono = true;
        break;
      }
    }
    if (!mono) return false;
    std::size_t i = 0;
    while (i < color.size() && ++color[i] == k) color[i++] = 0;
    if (i == color.size()) return true;
  }
}

// Dual version: colorings of the partitions of an n-set into a blocks, with
// "b-block coarsenings" as the monochromatic targets. Partitions are labelled
// by restricted growth strings.
inline std::vector<std::vector<int>> rgs(int n, int blocks) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      if (used == blocks) out.push_back(cur);
      return;
    }
    for (int c = 0; c <= std::min(used, blocks - 1); ++c) {
      cur[i] = c;
      rec(i + 1, std::max(used, c + 1));
    }
  };
  if (n > 0) rec(0, 0);
  return out;
}

inline bool is_coarser(const std::vector<int>& coarse, const std::vector<int>& fine) {
  for (std::size_t i = 0; i < fine.size(); ++i) {
    for (std::size_t j = 0; j < fine.size(); ++j) {
      if (fine[i] == fine[j] && coarse[i] != coarse[j]) return false;
    }
  }
  return true;
}

inline bool partition_arrow(int n, int b, int a, int k) {
  const auto items = rgs(n, a);
  std::vector<std::vector<int>> edges;
  for (const auto& p : rgs(n, b)) {
    std::vector<int> e;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (is_coarser(items[i], p)) e.push_back(static_cast<int>(i));
    }
    edges.push_back(e);
  }
  std::vector<int> color(items.size(), 0);
  while (true) {
    bool mono = false;
    for (const auto& e : edges) {
      if (std::all_of(e.begin(), e.end(), [&](int i) { return color[i] == color[e[0]]; })) {
        mono = true;
        break;
      }
    }
    if (!mono) return false;
    std::size_t i = 0;
    while (i < color.size() && ++color[i] == k) color[i++] = 0;
    if (i == color.size()) return true;
  }
}

// Root- and parent-preserving injections between parent arrays.
inline std::uint64_t tree_embeddings(const std::vector<int>& s, const std::vector<int>& t) {
  const int n = static_cast<int>(s.size());
  const int m = static_cast<int>(t.size());
  std::vector<int> h(n, -1);
  std::vector<bool> used(m, false);
  std::uint64_t count = 0;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      ++count;
      return;
    }
    for (int v = 0; v < m; ++v) {
      if (used[v]) continue;
      if (i == 0 ? v != 0 : t[v] != h[s[i]]) continue;
      used[v] = true;
      h[i] = v;
      rec(i + 1);
      used[v] = false;
    }
  };
  rec(0);
  return count;
}

// Number of d-dimensional subspaces of GF(p)^n.
inline std::uint64_t gaussian_binomial(int n, int d, int p) {
  std::uint64_t num = 1, den = 1;
  for (int i = 0; i < d; ++i) {
    std::uint64_t a = 1, b = 1;
    for (int j = 0; j < n - i; ++j) a *= p;
    for (int j = 0; j < i + 1; ++j) b *= p;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

// Injective linear maps GF(p)^m -> GF(p)^n.
inline std::uint64_t injective_linear(int m, int n, int p) {
  std::uint64_t r = 1, pn = 1;
  for (int j = 0; j < n; ++j) pn *= p;
  std::uint64_t pi = 1;
  for (int i = 0; i < m; ++i) {
    if (pn < pi) return 0;
    r *= pn - pi;
    pi *= p;
  }
  return r;
}

}  // namespace oracle

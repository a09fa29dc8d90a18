#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace arrowlab {

/// Colored items are vertices; each w : B -> C contributes the edge
/// w . items(B). A coloring with no monochromatic edge is a bad coloring for
/// the arrow relation.
struct Hypergraph {
  int vertices = 0;
  std::vector<std::vector<int>> edges;
};

enum class KernelStatus { found, exhausted, budget_exceeded };

struct KernelResult {
  KernelStatus status = KernelStatus::exhausted;
  /// 0-based colors in vertex order; set when status == found.
  std::vector<int> coloring;
  std::uint64_t explored = 0;
};

/// No edge of `g` is monochromatic under `coloring` (0-based colors).
bool is_proper_coloring(const Hypergraph& g, std::span<const int> coloring);

/// Number of colorings with at most k colors up to color renaming,
/// sum_{j<=k} S(n, j); saturates at UINT64_MAX.
std::uint64_t canonical_coloring_count(int n, int k);

/// Plain enumeration of canonical colorings (vertex 0 gets color 0, new colors
/// appear in order) in lexicographic order; returns the least proper one.
/// Serial reference implementation.
KernelResult exhaustive_serial(const Hypergraph& g, int k, std::uint64_t budget);

/// Same contract as exhaustive_serial, with prefixes of the enumeration split
/// across OpenMP threads. The result (coloring and explored count) does not
/// depend on the thread count. jobs <= 0 uses the OpenMP default.
KernelResult exhaustive_parallel(const Hypergraph& g, int k, std::uint64_t budget, int jobs = 0);

enum class PropagationFault {
  none,
  /// An edge with one free item and all other items alike is treated as a
  /// dead end instead of removing that color from the free item. Unsound;
  /// exists so cross-checks can be shown to catch it.
  over_prune,
};

struct BacktrackOptions {
  std::uint64_t node_budget = 50'000'000;
  PropagationFault fault = PropagationFault::none;
};

/// Depth-first search for a proper coloring with forward propagation: once all
/// but one item of an edge carry the same color, that color is removed from the
/// remaining item. Vertices are branched on in order of decreasing degree. A
/// found coloring is returned in canonical form.
KernelResult backtrack_search(const Hypergraph& g, int k, const BacktrackOptions& opts = {});

}  // namespace arrowlab

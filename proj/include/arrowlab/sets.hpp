#pragma once

#include <cstdint>
#include <vector>

#include "arrowlab/category.hpp"
#include "arrowlab/category_ops.hpp"
#include "arrowlab/kernels.hpp"

namespace arrowlab {

/// Finite sets {0..n-1}, n >= 1, and injective maps. Object payload [n];
/// morphism payload is the image table.
CategoryPtr fsi_category();
/// Finite sets and surjective maps, same encodings as FSI.
CategoryPtr fss_category();

ObjectId finite_set(int n);

/// Set partition as a restricted growth string: p[0] = 0 and
/// p[i] <= 1 + max(p[0..i-1]). Block labels are p's values.
using Partition = std::vector<int>;

/// Relabels an arbitrary block labelling into restricted growth form.
Partition canonical_partition(const std::vector<int>& labels);
bool is_canonical_partition(const Partition& p);
int block_count(const Partition& p);
std::vector<std::vector<int>> blocks_of(const Partition& p);

/// All partitions of {0..n-1} into exactly `blocks` blocks, lexicographic.
std::vector<Partition> set_partitions(int n, int blocks);
/// Stirling number of the second kind.
std::uint64_t stirling2(int n, int k);

/// Every block of `fine` lies inside a block of `coarse`.
bool coarser(const Partition& coarse, const Partition& fine);

/// Kernel partition of a surjection class in FSS^op. The representative is
/// an op-morphism A -> B, i.e. a surjection B -> A.
Partition partition_of_class(const SubobjectClass& cls);

/// Dual Ramsey instance written directly in partition language: vertices are
/// the a-block partitions of {0..n-1}, and every b-block partition beta gives
/// the edge of a-block partitions coarser than beta.
Hypergraph dual_partition_hypergraph(int n, int b, int a);

}  // namespace arrowlab

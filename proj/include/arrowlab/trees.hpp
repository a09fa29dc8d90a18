#pragma once

#include <string>
#include <vector>

#include "arrowlab/category.hpp"
#include "arrowlab/functor.hpp"

namespace arrowlab {

/// Rooted finite tree as a parent array: parent[0] = -1 and
/// 0 <= parent[i] < i otherwise. Used directly as the object payload.
using ParentArray = std::vector<int>;

bool is_tree(const ParentArray& t);
std::vector<int> levels(const ParentArray& t);
std::vector<std::vector<int>> children(const ParentArray& t);
/// Every node at level n has the same number b(n) of children.
bool is_homogeneous(const ParentArray& t);

/// AHU canonical labelling: isomorphic trees give equal arrays.
ParentArray canonical_tree(const ParentArray& t);

/// Trees with parent- and root-preserving injections; payload = image table.
/// With `homogeneous_only` the full subcategory of homogeneous trees.
CategoryPtr tree_category(bool homogeneous_only = false);

/// Smallest homogeneous tree containing t: b(n) is the largest branching at
/// level n of t; nodes of t keep their numbers and new nodes are appended in
/// breadth-first order.
ParentArray homogeneous_closure(const ParentArray& t);

/// Six-node tree: root 0, inner nodes 1 (children 3, 4) and 2 (child 5).
ParentArray six_node_tree();

/// Homogeneous closure F : TREE -> HTREE, inclusion G : HTREE -> TREE, unit
/// the inclusion t -> GF(t), counit the identity. F extends a morphism by
/// sending each added node to the least unused child of the image of its
/// parent.
AdjunctionImpl tree_closure_adjunction();

}  // namespace arrowlab

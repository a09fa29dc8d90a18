#pragma once

#include <utility>
#include <vector>

#include "arrowlab/category.hpp"
#include "arrowlab/functor.hpp"
#include "arrowlab/sets.hpp"

namespace arrowlab {

/// GF(p)^n for 1 <= n, with injective (or surjective) linear maps. Object
/// payload [n]; a map F^m -> F^n is the n x m matrix acting on column
/// vectors, stored row-major with entries in 0..p-1.
struct VectorSpaceCategories {
  CategoryPtr injective;
  CategoryPtr surjective;
};

VectorSpaceCategories vector_space_categories(int p);

bool is_prime(int p);
int matrix_rank(std::vector<int> a, int rows, int cols, int p);

/// Transpose of T : F^m -> F^n as a map F^n -> F^m, placed in `target`.
Morphism adjoint(const Morphism& t, const FiniteCategory& target);

/// T x for a column vector x.
std::vector<int> apply_matrix(const Morphism& t, const std::vector<int>& x, int p);
int inner_product(const std::vector<int>& x, const std::vector<int>& y, int p);

/// Vector at index v of F^n, coordinate 0 most significant.
std::vector<int> vector_at(int v, int n, int p);

/// Coset partitions of the p^n vectors (indexed as in vector_at) by every
/// subspace W with dim(V/W) = d; sorted.
std::vector<Partition> quotient_partitions_lin(int n, int d, int p);

/// Injective maps and the opposite of surjective maps, related by T |-> T*.
EquivalenceImpl vector_space_duality(int p);

}  // namespace arrowlab

#pragma once

#include "arrowlab/category.hpp"
#include "arrowlab/functor.hpp"
#include "arrowlab/sets.hpp"

namespace arrowlab {

/// Finite boolean algebras P({0..n-1}), n >= 1 atoms, with surjective
/// homomorphisms. Object payload [n]; elements are bitmasks; a morphism
/// P(m) -> P(n) is the table of the images of all 2^m elements.
CategoryPtr fbas_category();

ObjectId boolean_algebra(int atoms);

/// Homomorphism P(m) -> P(n) induced by g : {0..n-1} -> {0..m-1}, S |-> g^-1(S).
Payload preimage_table(const std::vector<int>& g, int m);

/// Kernel of a homomorphism as a partition of the 2^m elements of its domain.
Partition congruence_of(const Morphism& h);

/// Stone duality: E : FSI -> FBAS^op, [n] |-> P(n), f |-> (S |-> f^-1(S)),
/// with H the inverse functor and identity unit and counit.
EquivalenceImpl stone_duality();

}  // namespace arrowlab

#pragma once

#include <functional>
#include <utility>

#include "arrowlab/category.hpp"

namespace arrowlab {

/// C^op: hom_op(A, B) = hom(B, A), composition reversed. Morphisms keep the
/// base payload with dom/cod swapped. opposite(opposite(C)) returns C.
CategoryPtr opposite(CategoryPtr cat);
/// Base morphism underlying an opposite morphism (dom/cod swapped back).
Morphism unop(const Morphism& m);
Morphism op(const Morphism& m);

/// C1 x C2 with componentwise composition. Object and morphism payloads are
/// [len(first), first..., second...].
CategoryPtr product(CategoryPtr first, CategoryPtr second);
ObjectId pair_object(const ObjectId& first, const ObjectId& second);
Morphism pair_morphism(const Morphism& first, const Morphism& second);
/// Components of a product object or morphism; `prod` must come from product().
std::pair<ObjectId, ObjectId> split_object(const FiniteCategory& prod, const ObjectId& obj);
std::pair<Morphism, Morphism> split_morphism(const FiniteCategory& prod, const Morphism& m);
std::pair<CategoryPtr, CategoryPtr> factors(const FiniteCategory& prod);

/// One object, one morphism.
CategoryPtr unit_category();

/// Full subcategory on the objects accepted by `keep`.
CategoryPtr restricted(CategoryPtr base, std::function<bool(const ObjectId&)> keep,
                       std::string label);

/// Fault injection: whenever base composition yields `victim`, the returned
/// morphism has payload entries `i` and `j` swapped.
CategoryPtr corrupted_composition(CategoryPtr base, Morphism victim, int i, int j);

}  // namespace arrowlab

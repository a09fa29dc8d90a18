#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arrowlab/category.hpp"

namespace arrowlab {

/// Invertible elements of hom(A, A).
std::vector<Morphism> automorphisms(const FiniteCategory& cat, const ObjectId& a);
bool is_rigid(const FiniteCategory& cat, const ObjectId& a);

/// Two-sided inverse of m, if one exists.
std::optional<Morphism> inverse_of(const FiniteCategory& cat, const Morphism& m);

/// The coset f . Aut(A) inside hom(A, B), named by its least member.
struct SubobjectClass {
  Morphism representative;
  ObjectId source;
  ObjectId target;

  bool operator==(const SubobjectClass& o) const { return representative == o.representative; }
  auto operator<=>(const SubobjectClass& o) const { return representative <=> o.representative; }
};

/// Least element of f . aut, where `aut` is Aut(dom f).
Morphism canonical_representative(const FiniteCategory& cat, const Morphism& f,
                                  const std::vector<Morphism>& aut);

/// hom(A, B) / ~_A, sorted by representative.
std::vector<SubobjectClass> subobject_classes(const FiniteCategory& cat, const ObjectId& a,
                                              const ObjectId& b);

/// w . (f / ~_A) = (w . f) / ~_A.
SubobjectClass act_on_class(const FiniteCategory& cat, const Morphism& w,
                            const SubobjectClass& cls);

struct LawViolation {
  std::string law;
  std::string detail;
};

struct LawReport {
  std::string subject;
  int bound = 0;
  std::vector<LawViolation> violations;
  std::size_t checks = 0;

  bool ok() const { return violations.empty(); }
  void add(std::string law, std::string detail) {
    violations.push_back({std::move(law), std::move(detail)});
  }
  void merge(const LawReport& other);
};

/// Identity laws, associativity, closure of composition and duplicate-free hom
/// enumeration over every object of grade <= bound.
LawReport verify_category_laws(const FiniteCategory& cat, int bound);

/// Cofinality of a full subcategory: returns the first object of `cat` with
/// grade <= bound that has no arrow into any of `sub_objects`.
std::optional<ObjectId> find_non_cofinal(const FiniteCategory& cat,
                                         const std::vector<ObjectId>& sub_objects, int bound);

}  // namespace arrowlab

#pragma once

#include <functional>
#include <optional>
#include <string>

#include <json.hpp>

#include "arrowlab/category.hpp"
#include "arrowlab/category_ops.hpp"

namespace arrowlab {

/// A functor given by object and morphism rules. When `domain_bound` is set,
/// applying the functor to an object or morphism above that grade is an error.
class FunctorImpl {
 public:
  using ObjectMap = std::function<ObjectId(const ObjectId&)>;
  using MorphismMap = std::function<Morphism(const Morphism&)>;

  FunctorImpl(std::string name, CategoryPtr source, CategoryPtr target, ObjectMap on_objects,
              MorphismMap on_morphisms, std::optional<int> domain_bound = std::nullopt);

  const std::string& name() const { return name_; }
  const CategoryPtr& source() const { return source_; }
  const CategoryPtr& target() const { return target_; }
  std::optional<int> domain_bound() const { return bound_; }

  ObjectId operator()(const ObjectId& a) const;
  Morphism operator()(const Morphism& f) const;

 private:
  void check_domain(const ObjectId& a) const;

  std::string name_;
  CategoryPtr source_, target_;
  ObjectMap on_objects_;
  MorphismMap on_morphisms_;
  std::optional<int> bound_;
};

FunctorImpl identity_functor(CategoryPtr cat);
/// g . f
FunctorImpl compose(const FunctorImpl& g, const FunctorImpl& f);
/// Same functor except that `at` is sent to `value`.
FunctorImpl with_morphism_override(const FunctorImpl& f, Morphism at, Morphism value);

/// Tables of a functor over the source objects and morphisms of grade <= bound:
/// {"name", "bound", "objects": [[src, dst], ...],
///  "morphisms": [{"dom", "cod", "payload", "image"}, ...]}.
nlohmann::json functor_to_tables(const FunctorImpl& f, int bound);
/// Table-driven functor; restricted to the tabulated grade range.
FunctorImpl functor_from_tables(const nlohmann::json& tables, CategoryPtr source,
                                CategoryPtr target);

/// alpha : F => G with components alpha_A : F(A) -> G(A).
class NaturalTransformationImpl {
 public:
  using Components = std::function<Morphism(const ObjectId&)>;

  NaturalTransformationImpl(std::string name, FunctorImpl from, FunctorImpl to,
                            Components components);

  const std::string& name() const { return name_; }
  const FunctorImpl& from() const { return from_; }
  const FunctorImpl& to() const { return to_; }
  Morphism at(const ObjectId& a) const { return components_(a); }

 private:
  std::string name_;
  FunctorImpl from_, to_;
  Components components_;
};

/// Component family made of identities (for F = G pointwise on objects).
NaturalTransformationImpl identity_transformation(std::string name, FunctorImpl from,
                                                  FunctorImpl to);
NaturalTransformationImpl with_component_override(const NaturalTransformationImpl& t,
                                                  ObjectId at, Morphism value);

/// F : C -> D left adjoint to G : D -> C with unit eta : ID_C => GF and counit
/// eps : FG => ID_D.
class AdjunctionImpl {
 public:
  AdjunctionImpl(std::string name, FunctorImpl left, FunctorImpl right,
                 NaturalTransformationImpl unit, NaturalTransformationImpl counit);

  const std::string& name() const { return name_; }
  const FunctorImpl& left() const { return left_; }
  const FunctorImpl& right() const { return right_; }
  const NaturalTransformationImpl& unit() const { return unit_; }
  const NaturalTransformationImpl& counit() const { return counit_; }

  /// f : F(c) -> d  |->  G(f) . eta_c : c -> G(d)
  Morphism phi(const ObjectId& c, const Morphism& f) const;
  /// g : c -> G(d)  |->  eps_d . F(g) : F(c) -> d
  Morphism phi_inverse(const Morphism& g, const ObjectId& d) const;

 private:
  std::string name_;
  FunctorImpl left_, right_;
  NaturalTransformationImpl unit_, counit_;
};

AdjunctionImpl identity_adjunction(CategoryPtr cat);

/// E : C -> D, H : D -> C with natural isomorphisms eta : ID_C => HE and
/// eps : ID_D => EH.
class EquivalenceImpl {
 public:
  EquivalenceImpl(std::string name, FunctorImpl e, FunctorImpl h, NaturalTransformationImpl eta,
                  NaturalTransformationImpl eps);

  const std::string& name() const { return name_; }
  const FunctorImpl& e() const { return e_; }
  const FunctorImpl& h() const { return h_; }
  const NaturalTransformationImpl& eta() const { return eta_; }
  const NaturalTransformationImpl& eps() const { return eps_; }

  /// The same equivalence read from D to C.
  EquivalenceImpl swapped() const;
  /// E left adjoint to H; the counit is eps^-1.
  AdjunctionImpl as_adjunction() const;

 private:
  std::string name_;
  FunctorImpl e_, h_;
  NaturalTransformationImpl eta_, eps_;
};

EquivalenceImpl identity_equivalence(CategoryPtr cat);

/// Equivalence between two categories that share payload encodings: both
/// functors keep payloads, unit and counit are identities.
EquivalenceImpl payload_identity_equivalence(std::string name, CategoryPtr c, CategoryPtr d);

/// Preservation of dom/cod, identities and composition over source objects of
/// grade <= bound.
LawReport verify_functor(const FunctorImpl& f, int bound);
LawReport verify_natural_transformation(const NaturalTransformationImpl& t, int bound);
/// Functor laws, naturality of unit and counit, both triangle identities, Phi
/// and Phi^-1 mutually inverse bijections, naturality of Phi in both
/// arguments. `bound` applies to objects of both categories.
LawReport verify_adjunction(const AdjunctionImpl& adj, int bound);
/// Functor laws, naturality, invertible components, E full and faithful.
LawReport verify_equivalence(const EquivalenceImpl& eq, int bound);

}  // namespace arrowlab

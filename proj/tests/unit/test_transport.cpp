#include <doctest.h>

#include <random>

#include "arrowlab/arrow.hpp"
#include "arrowlab/boolean.hpp"
#include "arrowlab/category_ops.hpp"
#include "arrowlab/ordered_power.hpp"
#include "arrowlab/sets.hpp"
#include "arrowlab/transport.hpp"
#include "arrowlab/trees.hpp"
#include "arrowlab/vector_space.hpp"

using namespace arrowlab;

namespace {

RamseyOracle proven(const ArrowQuery& q) {
  auto v = check_arrow(q);
  REQUIRE(v.holds());
  return *v.finder;
}

// Evaluates the oracle on every coloring; evaluate() asserts the postcondition.
std::uint64_t evaluate_all(const RamseyOracle& o) {
  const int n = o.items()->size();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= o.query().k;
  for (std::uint64_t r = 0; r < total; ++r) o.evaluate(coloring_from_rank(o.items(), o.query().k, r));
  return total;
}

EquivalenceImpl ov_skeleton() {
  return skeleton_equivalence(ofba_category(), ov_fin_category(OrderedCarrier::natural(3)));
}

}  // namespace

TEST_CASE("functor laws for the built-in functors") {
  const auto stone = stone_duality();
  CHECK(verify_functor(stone.e(), 3).ok());
  CHECK(verify_functor(stone.h(), 3).ok());
  const auto skel = ov_skeleton();
  CHECK(verify_functor(skel.e(), 3).ok());
  CHECK(verify_functor(skel.h(), 3).ok());
  CHECK(verify_functor(forgetful_functor(ofba_category(), fba_category()), 3).ok());
}

TEST_CASE("a corrupted morphism map breaks functoriality") {
  const auto stone = stone_duality();
  auto fsi = fsi_category();
  const auto homs = fsi->hom(finite_set(1), finite_set(2));
  auto bad = with_morphism_override(stone.e(), homs[0], stone.e()(homs[1]));
  CHECK_FALSE(verify_functor(bad, 3).ok());
}

TEST_CASE("adjunction laws") {
  CHECK(verify_adjunction(identity_adjunction(fsi_category()), 4).ok());
  CHECK(verify_adjunction(stone_duality().as_adjunction(), 3).ok());
  CHECK(verify_adjunction(ov_skeleton().as_adjunction(), 2).ok());
  CHECK(verify_equivalence(stone_duality(), 3).ok());
  CHECK(verify_equivalence(ov_skeleton(), 3).ok());
  CHECK(verify_equivalence(vector_space_duality(2), 2).ok());
  CHECK(verify_adjunction(tree_closure_adjunction(), 4).ok());
}

TEST_CASE("a corrupted unit component is detected") {
  const auto adj = stone_duality().as_adjunction();
  auto fsi = fsi_category();
  const auto two = finite_set(2);
  const auto swap = fsi->hom(two, two).back();
  AdjunctionImpl bad(adj.name(), adj.left(), adj.right(),
                     with_component_override(adj.unit(), two, swap), adj.counit());
  CHECK_FALSE(verify_adjunction(bad, 3).ok());
}

TEST_CASE("identity adjunction transport returns the same answers") {
  const ArrowQuery q{fsi_category(), finite_set(5), finite_set(3), finite_set(1), 2, Variant::hom};
  const auto o = proven(q);
  const auto t = adjunction_transport_hom(identity_adjunction(q.cat), o, q.a, q.b);
  for (std::uint64_t r = 0; r < 32; ++r) {
    const auto chi = coloring_from_rank(o.items(), 2, r);
    const auto x = o.evaluate(chi);
    const auto y = t.evaluate(coloring_from_rank(t.items(), 2, r));
    CHECK(x.color == y.color);
    CHECK(x.w == y.w);
  }
}

TEST_CASE("tree closure transport passes on every coloring") {
  const auto adj = tree_closure_adjunction();
  auto trees = tree_category();
  auto htrees = tree_category(true);
  const auto a = trees->object({-1, 0, 1});
  const auto b = trees->object({-1, 0, 0, 1});
  const auto c = htrees->object({-1, 0, 0, 0, 1, 2, 3});
  const auto o = proven({htrees, c, adj.left()(b), adj.left()(a), 2, Variant::hom});
  const auto t = adjunction_transport_hom(adj, o, a, b);
  CHECK(t.items()->size() <= 8);
  CHECK(evaluate_all(t) == 8);
}

TEST_CASE("Stone transport of a hom oracle") {
  const auto adj = stone_duality().swapped().as_adjunction();
  auto dual = adj.left().source();
  const auto a = dual->object({1});
  const auto b = dual->object({3});
  const auto o = proven({fsi_category(), finite_set(5), adj.left()(b), adj.left()(a), 2, Variant::hom});
  const auto t = adjunction_transport_hom(adj, o, a, b);
  CHECK(evaluate_all(t) == 32);
}

TEST_CASE("Aut-condition") {
  const auto skel = ov_skeleton();
  for (const auto& x : ofba_category()->objects(3)) CHECK(check_aut_condition(skel.e(), x));
  CHECK(check_aut_condition(identity_functor(fsi_category()), finite_set(3)));
  const auto adj = tree_closure_adjunction();
  CHECK_FALSE(check_aut_condition(adj.left(), tree_category()->object(six_node_tree())));
}

TEST_CASE("class compatibility of Phi") {
  const auto stone = stone_duality().as_adjunction();
  for (int a = 1; a <= 3; ++a) {
    for (int b = a; b <= 3; ++b) {
      const auto r = class_phi_compat(stone, finite_set(a), boolean_algebra(b));
      CHECK(r.compatible);
      CHECK(r.left_classes == r.right_classes);
    }
  }
  CHECK(class_phi_compat(identity_adjunction(fsi_category()), finite_set(2), finite_set(4)).compatible);

  const auto trees = tree_closure_adjunction();
  const auto a = tree_category()->object(six_node_tree());
  const auto r = class_phi_compat(trees, a, trees.left()(a));
  CHECK(r.refused);
  CHECK(r.left_classes == 1);
  CHECK(r.right_classes == 4);
  CHECK(r.reason.find("1 vs 4") != std::string::npos);
}

TEST_CASE("identity equivalence transport is the identity") {
  const ArrowQuery q{fsi_category(), finite_set(6), finite_set(3), finite_set(2), 2, Variant::subobject};
  const auto o = proven(q);
  const auto t = equivalence_transport_obj(identity_equivalence(q.cat), o, q.a, q.b);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> color(1, 2);
  for (int s = 0; s < 100; ++s) {
    std::vector<int> colors(15);
    for (auto& c : colors) c = color(rng);
    const auto x = o.evaluate(colors);
    const auto y = t.evaluate(colors);
    CHECK(x.color == y.color);
    CHECK(x.w == y.w);
  }
}

TEST_CASE("Stone transport of the (6, 3, 2) oracle into FBAS^op, every coloring") {
  const auto eq = stone_duality().swapped();
  auto dual = eq.e().source();
  const auto a = dual->object({2});
  const auto b = dual->object({3});
  const auto o = proven({fsi_category(), finite_set(6), eq.e()(b), eq.e()(a), 2, Variant::subobject});
  const auto t = equivalence_transport_obj(eq, o, a, b);
  CHECK(t.query().c.payload == Payload{6});
  CHECK(evaluate_all(t) == 32768);
}

TEST_CASE("transport refuses an oracle for the wrong objects") {
  const auto eq = stone_duality().swapped();
  auto dual = eq.e().source();
  const auto o = proven({fsi_category(), finite_set(6), finite_set(3), finite_set(2), 2, Variant::subobject});
  CHECK_THROWS_AS(equivalence_transport_obj(eq, o, dual->object({1}), dual->object({3})), PreconditionError);
}

TEST_CASE("skeleton equivalence preserves arrow verdicts") {
  const auto eq = ov_skeleton();
  auto ofba = ofba_category();
  for (const auto& a : ofba->objects(1)) {
    for (const auto& b : ofba->objects(2)) {
      if (!ofba->has_arrow(a, b)) continue;
      for (const auto& c : ofba->objects(3)) {
        if (!ofba->has_arrow(b, c)) continue;
        const ArrowQuery q{ofba, c, b, a, 2, Variant::subobject};
        const ArrowQuery d{eq.e().target(), eq.e()(c), eq.e()(b), eq.e()(a), 2, Variant::subobject};
        CHECK(check_arrow(q).status == check_arrow(d).status);
      }
    }
  }
}

TEST_CASE("ordering transport along the skeleton squares") {
  auto ofba = ofba_category();
  auto fba = fba_category();
  auto ov = ov_fin_category(OrderedCarrier::natural(3));
  auto v = v_fin_category(3);
  const auto star = skeleton_equivalence(ofba, ov);
  const auto base = payload_identity_equivalence("bases", fba, v);
  const auto u_forget = forgetful_functor(ofba, fba);
  const auto v_forget = forgetful_functor(ov, v);
  const auto a = v->object({2});
  const auto out = ordering_transport(star, base, u_forget, v_forget, a, fba->object({2}), 3);
  CHECK(out.payload == Payload{2});

  CHECK_THROWS_AS(ordering_transport(star, base, u_forget, v_forget, v->object({3}), fba->object({2}), 3),
                  PreconditionError);

  std::vector<Morphism> homs;
  for (const auto& x : ofba->objects(3)) {
    for (const auto& y : ofba->objects(3)) {
      if (homs.size() < 2) homs = ofba->hom(x, y);
    }
  }
  REQUIRE(homs.size() >= 2);
  EquivalenceImpl broken("broken", with_morphism_override(star.e(), homs[0], star.e()(homs[1])), star.h(),
                         star.eta(), star.eps());
  CHECK_THROWS_AS(ordering_transport(broken, base, u_forget, v_forget, a, fba->object({2}), 3),
                  PreconditionError);
}

TEST_CASE("ordering transport with identity equivalences keeps the witness") {
  auto ofba = ofba_category();
  auto fba = fba_category();
  const auto u = forgetful_functor(ofba, fba);
  const auto out = ordering_transport(identity_equivalence(ofba), identity_equivalence(fba), u, u,
                                      fba->object({2}), fba->object({2}), 3);
  CHECK(out.payload == Payload{2});
}

#include <doctest.h>

#include "arrowlab/derived.hpp"
#include "arrowlab/fraisse.hpp"
#include "arrowlab/ordered_power.hpp"
#include "arrowlab/sets.hpp"
#include "arrowlab/trees.hpp"

using namespace arrowlab;

TEST_CASE("HP passes for closed classes and fails with a counterexample") {
  CHECK(check_HP(*fsi_category(), 4).status == ClosureStatus::pass);
  CHECK(check_HP(*tree_category(true), 5).status == ClosureStatus::fail);
  auto no_pairs = restricted(fsi_category(), [](const ObjectId& o) { return o.payload[0] != 2; }, "FSI-no2");
  const auto r = check_HP(*no_pairs, 3);
  CHECK(r.status == ClosureStatus::fail);
  CHECK(r.counterexample["substructure"] == nlohmann::json::array({2}));
}

TEST_CASE("JEP and AP are pass or inconclusive") {
  auto fsi = fsi_category();
  const auto candidates = fsi->objects(4);
  CHECK(check_JEP(*fsi, 2, candidates, 100).status == ClosureStatus::pass);
  CHECK(check_AP(*fsi, 2, candidates, 100).status == ClosureStatus::pass);
  CHECK(check_AP(*fsi, 2, candidates, 0).status == ClosureStatus::inconclusive);
  CHECK(check_JEP(*fsi, 2, candidates, 1).status == ClosureStatus::inconclusive);
}

TEST_CASE("AP reports are reproducible and amalgams commute") {
  auto ov = ov_fin_category(OrderedCarrier::natural(3));
  const auto candidates = ov->objects(3);
  const auto r1 = check_AP(*ov, 2, candidates, 1000);
  const auto r2 = check_AP(*ov, 2, candidates, 1000);
  CHECK(r1.certificate == r2.certificate);
  CHECK(r1.status == ClosureStatus::pass);
  auto v = v_fin_category(3);
  CHECK(check_AP(*v, 2, v->objects(3), 1000).status == ClosureStatus::pass);
}

TEST_CASE("order expansion and reasonableness of ordered powers") {
  auto ov = ov_fin_category(OrderedCarrier::natural(3));
  const auto u = forgetful_functor(ov, v_fin_category(3));
  CHECK(check_order_expansion(u, 3).status == ClosureStatus::pass);
  const auto hinted = check_reasonable(u, 3, ordered_power_hint(ov));
  CHECK(hinted.status == ClosureStatus::pass);
  CHECK(check_reasonable(u, 3).status == ClosureStatus::pass);
  CHECK(hinted.detail.find(std::to_string(hinted.checked) + " by the hint") != std::string::npos);
}

TEST_CASE("missing expansions are reported") {
  auto ov = ov_fin_category(OrderedCarrier::natural(2));
  auto v = v_fin_category(2);
  auto small = restricted(ov, [](const ObjectId& o) { return o.grade <= 2; }, "OV-small");
  CHECK(check_order_expansion(forgetful_functor(small, v), 3).status == ClosureStatus::fail);

  auto natural_only = restricted(
      ov,
      [](const ObjectId& o) {
        for (std::size_t i = 1; i < o.payload.size(); ++i) {
          if (o.payload[i] != static_cast<int>(i)) return false;
        }
        return true;
      },
      "OV-natural");
  const auto r = check_reasonable(forgetful_functor(natural_only, v), 2);
  CHECK(r.status == ClosureStatus::fail);
  CHECK(r.counterexample.contains("f"));
}

TEST_CASE("ordering witnesses for boolean algebras") {
  const auto u = forgetful_functor(ofba_category(), fba_category());
  auto fba = fba_category();
  const auto found = find_ordering_witness(u, fba->object({2}), fba->objects(5), 5);
  REQUIRE(found.witness.has_value());
  CHECK(check_ordering_witness(u, fba->object({2}), *found.witness).witness);
  CHECK(found.tried <= 5);
}

#include <doctest.h>

#include "arrowlab/category_ops.hpp"
#include "arrowlab/derived.hpp"
#include "arrowlab/json_io.hpp"
#include "arrowlab/sets.hpp"
#include "oracles.hpp"

using namespace arrowlab;

TEST_CASE("FSI and FSS hom counts match closed forms") {
  auto fsi = fsi_category();
  auto fss = fss_category();
  for (int m = 1; m <= 5; ++m) {
    for (int n = 1; n <= 5; ++n) {
      CHECK(fsi->hom(finite_set(m), finite_set(n)).size() == oracle::falling(n, m));
      CHECK(fss->hom(finite_set(m), finite_set(n)).size() == oracle::surjections(m, n));
    }
  }
}

TEST_CASE("hom order is ascending payload order") {
  auto homs = fsi_category()->hom(finite_set(2), finite_set(4));
  CHECK(std::is_sorted(homs.begin(), homs.end()));
  CHECK(homs.front().payload == Payload{0, 1});
  CHECK(homs.back().payload == Payload{3, 2});
}

TEST_CASE("category laws hold for built-in categories") {
  CHECK(verify_category_laws(*fsi_category(), 4).ok());
  CHECK(verify_category_laws(*fss_category(), 4).ok());
  CHECK(verify_category_laws(*opposite(fss_category()), 4).ok());
  CHECK(verify_category_laws(*product(fsi_category(), fss_category()), 2).ok());
  CHECK(verify_category_laws(*unit_category(), 1).ok());
}

TEST_CASE("corrupted composition is caught") {
  auto fsi = fsi_category();
  const auto victim = fsi->hom(finite_set(2), finite_set(3)).front();
  auto bad = corrupted_composition(fsi, victim, 0, 1);
  const auto report = verify_category_laws(*bad, 3);
  CHECK_FALSE(report.ok());
}

TEST_CASE("compose rejects mismatched morphisms") {
  auto fsi = fsi_category();
  const auto f = fsi->hom(finite_set(1), finite_set(2)).front();
  CHECK_THROWS_AS(fsi->compose(f, f), DomainError);
}

TEST_CASE("automorphisms and subobject classes in FSI") {
  auto fsi = fsi_category();
  for (int n = 1; n <= 4; ++n) CHECK(automorphisms(*fsi, finite_set(n)).size() == oracle::factorial(n));
  CHECK(is_rigid(*fsi, finite_set(1)));
  CHECK_FALSE(is_rigid(*fsi, finite_set(2)));
  for (int a = 1; a <= 3; ++a) {
    for (int c = a; c <= 5; ++c) {
      CHECK(subobject_classes(*fsi, finite_set(a), finite_set(c)).size() == oracle::binomial(c, a));
    }
  }
}

TEST_CASE("class representatives are least coset members") {
  auto fsi = fsi_category();
  const auto a = finite_set(2);
  const auto aut = automorphisms(*fsi, a);
  for (const auto& f : fsi->hom(a, finite_set(4))) {
    const auto rep = canonical_representative(*fsi, f, aut);
    for (const auto& alpha : aut) CHECK(rep <= fsi->compose(f, alpha));
  }
}

TEST_CASE("opposite is involutive and reverses arrows") {
  auto fss = fss_category();
  auto dual = opposite(fss);
  CHECK(opposite(dual).get() == fss.get());
  CHECK(dual->hom(finite_set(2), finite_set(3)).size() == fss->hom(finite_set(3), finite_set(2)).size());
}

TEST_CASE("product category splits into its factors") {
  auto prod = product(fsi_category(), fsi_category());
  const auto x = pair_object(finite_set(1), finite_set(2));
  const auto y = pair_object(finite_set(2), finite_set(3));
  CHECK(prod->hom(x, y).size() == 2 * 6);
  const auto [l, r] = split_object(*prod, y);
  CHECK(l.payload == Payload{2});
  CHECK(r.payload == Payload{3});
  CHECK(y.grade == 3);
}

TEST_CASE("find_non_cofinal spots objects above the subcategory") {
  auto fsi = fsi_category();
  CHECK_FALSE(find_non_cofinal(*fsi, {finite_set(3)}, 3).has_value());
  CHECK(find_non_cofinal(*fsi, {finite_set(2)}, 3)->payload == Payload{3});
}

TEST_CASE("table categories round-trip through JSON") {
  const auto j = nlohmann::json::parse(R"({
    "category": "table", "name": "arrow",
    "objects": [{"payload": [0], "grade": 1}, {"payload": [1], "grade": 1}],
    "morphisms": [{"dom": 0, "cod": 0, "payload": [0]}, {"dom": 1, "cod": 1, "payload": [1]},
                  {"dom": 0, "cod": 1, "payload": [2]}],
    "identities": [0, 1],
    "compose": [[0, 0, 0], [1, 1, 1], [2, 0, 2], [1, 2, 2]]
  })");
  auto cat = category_from_json(j);
  CHECK(verify_category_laws(*cat, 1).ok());
  CHECK(cat->hom(cat->object({0}), cat->object({1})).size() == 1);
  CHECK(category_from_json(cat->descriptor())->tag() == "arrow");
}

TEST_CASE("category descriptions reject unknown fields") {
  CHECK_THROWS_AS(category_from_json({{"category", "FSI"}, {"p", 2}}), DomainError);
  CHECK_THROWS_AS(category_from_json({{"category", "NOPE"}}), DomainError);
  auto v = category_from_json({{"category", "op"}, {"of", {{"category", "FSS"}}}});
  CHECK(v->tag() == opposite(fss_category())->tag());
}

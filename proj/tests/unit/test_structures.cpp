#include <doctest.h>

#include <set>

#include "arrowlab/boolean.hpp"
#include "arrowlab/category_ops.hpp"
#include "arrowlab/derived.hpp"
#include "arrowlab/fraisse.hpp"
#include "arrowlab/ordered_power.hpp"
#include "arrowlab/relational.hpp"
#include "arrowlab/sets.hpp"
#include "arrowlab/trees.hpp"
#include "arrowlab/vector_space.hpp"
#include "oracles.hpp"

using namespace arrowlab;

TEST_CASE("set partitions") {
  for (int n = 1; n <= 6; ++n) {
    for (int b = 1; b <= n; ++b) {
      const auto parts = set_partitions(n, b);
      CHECK(parts.size() == stirling2(n, b));
      CHECK(parts == oracle::rgs(n, b));
      for (const auto& p : parts) CHECK(is_canonical_partition(p));
    }
  }
  CHECK(canonical_partition({5, 5, 2, 5, 7}) == Partition{0, 0, 1, 0, 2});
  CHECK(coarser({0, 0, 0, 1}, {0, 1, 0, 2}));
  CHECK_FALSE(coarser({0, 1, 0, 1}, {0, 0, 1, 1}));
  CHECK(blocks_of({0, 1, 0}) == std::vector<std::vector<int>>{{0, 2}, {1}});
}

TEST_CASE("dual classes are partitions with the right block count") {
  auto dual = opposite(fss_category());
  const auto classes = subobject_classes(*dual, finite_set(2), finite_set(4));
  CHECK(classes.size() == stirling2(4, 2));
  std::set<Partition> seen;
  for (const auto& cls : classes) {
    const auto p = partition_of_class(cls);
    CHECK(block_count(p) == 2);
    seen.insert(p);
  }
  CHECK(seen.size() == classes.size());
}

TEST_CASE("boolean algebras: homs are dual to injections, congruences to partitions") {
  auto fbas = fbas_category();
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= m; ++n) {
      const auto homs = fbas->hom(boolean_algebra(m), boolean_algebra(n));
      CHECK(homs.size() == oracle::falling(m, n));
      std::set<Partition> congruences;
      for (const auto& h : homs) congruences.insert(congruence_of(h));
      CHECK(congruences.size() == oracle::binomial(m, n));
    }
  }
  CHECK(verify_category_laws(*fbas, 3).ok());
}

TEST_CASE("ordered hom-sets: characterization agrees with the order-preservation test") {
  for (int q : {2, 3}) {
    const auto base = OrderedCarrier::natural(q);
    for (int n = 1; n <= 3; ++n) {
      for (int m = 1; m <= 3; ++m) {
        for (const auto& pi : permutations(n)) {
          for (const auto& sigma : permutations(m)) {
            std::set<std::vector<int>> listed;
            for (const auto& h : enumerate_ordered_homs(n, pi, m, sigma)) listed.insert(h.tuple);
            // every tuple in [n]^m
            std::vector<int> t(m, 1);
            while (true) {
              const bool embedding = std::set<int>(t.begin(), t.end()).size() == static_cast<std::size_t>(n);
              if (embedding) CHECK(listed.contains(t) == is_ordered_hom_oracle(base, t, pi, sigma));
              int i = 0;
              while (i < m && ++t[i] > n) t[i++] = 1;
              if (i == m) break;
            }
          }
        }
      }
    }
  }
}

TEST_CASE("antilexicographic order and sorted powers") {
  const auto base = OrderedCarrier::natural(2);
  const auto sorted = sorted_power(base, {1, 2});
  CHECK(sorted.size() == 4);
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    CHECK(antilex_compare(base, {1, 2}, sorted[i - 1], sorted[i]) == std::strong_ordering::less);
  }
  CHECK(antilex_compare(base, {1, 2}, {1, 0}, {0, 1}) == std::strong_ordering::less);
  CHECK(antilex_compare(base, {2, 1}, {1, 0}, {0, 1}) == std::strong_ordering::greater);
}

TEST_CASE("ordered powers: HP decomposition and reasonable extension") {
  auto ov = ov_fin_category(OrderedCarrier::natural(3));
  CHECK(check_HP(*ov, 3).status == ClosureStatus::pass);
  CHECK(verify_category_laws(*ov, 3).ok());
  CHECK(hp_decompose({1, 2, 1}, 2, {1, 2, 3}) == std::vector<int>{2, 1});
}

TEST_CASE("OFBA and OV(3) have the same ordered hom counts") {
  auto ofba = ofba_category();
  auto ov = ov_fin_category(OrderedCarrier::natural(3));
  for (const auto& x : ofba->objects(3)) {
    for (const auto& y : ofba->objects(3)) {
      CHECK(ofba->hom(x, y).size() == ov->hom(ov->object(x.payload), ov->object(y.payload)).size());
    }
  }
}

TEST_CASE("vector spaces: hom counts and quotient partitions") {
  for (int p : {2, 3}) {
    const auto cats = vector_space_categories(p);
    for (int m = 1; m <= 2; ++m) {
      for (int n = m; n <= 3; ++n) {
        const auto inj = cats.injective->hom(cats.injective->object({m}), cats.injective->object({n}));
        CHECK(inj.size() == oracle::injective_linear(m, n, p));
        const auto surj = cats.surjective->hom(cats.surjective->object({n}), cats.surjective->object({m}));
        CHECK(surj.size() == oracle::injective_linear(m, n, p));
      }
    }
    for (int n = 1; n <= 3; ++n) {
      for (int d = 0; d <= n; ++d) {
        const auto parts = quotient_partitions_lin(n, d, p);
        CHECK(parts.size() == oracle::gaussian_binomial(n, d, p));
        std::size_t blocks = 1;
        for (int i = 0; i < d; ++i) blocks *= p;
        for (const auto& part : parts) {
          CHECK(std::set<int>(part.begin(), part.end()).size() == blocks);
        }
      }
      CHECK(quotient_partitions_lin(n, 0, p).size() == 1);
      CHECK(quotient_partitions_lin(n, n, p).size() == 1);
    }
  }
  CHECK_THROWS_AS(vector_space_categories(4), DomainError);
  CHECK(matrix_rank({1, 2, 2, 4}, 2, 2, 5) == 1);
}

TEST_CASE("adjoint satisfies <Tx, y> = <x, T*y>") {
  const int p = 3;
  const auto cats = vector_space_categories(p);
  const auto t = cats.injective->hom(cats.injective->object({2}), cats.injective->object({3}))[17];
  const auto ts = adjoint(t, *cats.surjective);
  for (int x = 0; x < 9; ++x) {
    for (int y = 0; y < 27; ++y) {
      const auto xv = vector_at(x, 2, p);
      const auto yv = vector_at(y, 3, p);
      CHECK(inner_product(apply_matrix(t, xv, p), yv, p) == inner_product(xv, apply_matrix(ts, yv, p), p));
    }
  }
}

TEST_CASE("trees: embeddings, canonical forms and closure") {
  auto trees = tree_category();
  const ParentArray s{-1, 0, 1};
  const ParentArray t{-1, 0, 0, 1, 2, 2};
  CHECK(trees->hom(trees->object(s), trees->object(t)).size() == oracle::tree_embeddings(s, t));
  CHECK(canonical_tree({-1, 0, 0, 2}) == canonical_tree({-1, 0, 1, 0}));
  CHECK(is_homogeneous({-1, 0, 0, 1, 2}));
  CHECK_FALSE(is_homogeneous(six_node_tree()));
  const auto closed = homogeneous_closure(six_node_tree());
  CHECK(closed == ParentArray{-1, 0, 0, 1, 1, 2, 2});
  CHECK(check_HP(*trees, 4).status == ClosureStatus::pass);
}

TEST_CASE("the six-node tree: class counts 4 and 1") {
  auto trees = tree_category();
  const auto a = trees->object(six_node_tree());
  const auto b = trees->object(homogeneous_closure(six_node_tree()));
  CHECK(trees->hom(a, b).size() == 8);
  CHECK(automorphisms(*trees, a).size() == 2);
  CHECK(subobject_classes(*trees, a, b).size() == 4);
  CHECK(subobject_classes(*trees, b, b).size() == 1);
}

TEST_CASE("relationalization satisfies the defining sentences") {
  FunctionalStructure s{3, {{"succ", 1, {1, 2, 0}}, {"max", 2, {0, 1, 2, 1, 1, 2, 2, 2, 2}}}};
  const auto r = relationalize(s);
  std::string reason;
  CHECK(check_star_sentences(s, r, &reason));
  auto broken = r;
  broken.relations[0].tuples.insert({0, 0});
  CHECK_FALSE(check_star_sentences(s, broken, &reason));
  CHECK_FALSE(reason.empty());
  CHECK(embeddings(s, s).size() == embeddings(r, r).size());
}

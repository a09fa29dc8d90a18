// Acceptance gate: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "arrowlab/arrow.hpp"
#include "arrowlab/boolean.hpp"
#include "arrowlab/category_ops.hpp"
#include "arrowlab/derived.hpp"
#include "arrowlab/fraisse.hpp"
#include "arrowlab/ordered_power.hpp"
#include "arrowlab/scenario.hpp"
#include "arrowlab/sets.hpp"
#include "arrowlab/transport.hpp"
#include "arrowlab/trees.hpp"
#include "arrowlab/vector_space.hpp"
#include "oracles.hpp"

using namespace arrowlab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first failed expectation.
class Check {
 public:
  void expect(bool cond, const std::string& what) {
    ++count_;
    if (!cond && ok_) {
      ok_ = false;
      first_ = what;
    }
  }
  Outcome done(std::string detail) const {
    if (!ok_) return {false, first_};
    return {true, std::move(detail)};
  }
  int count() const { return count_; }

 private:
  bool ok_ = true;
  int count_ = 0;
  std::string first_;
};

ArrowQuery fsi(int c, int b, int a, int k, Variant v = Variant::subobject) {
  return {fsi_category(), finite_set(c), finite_set(b), finite_set(a), k, v};
}

std::uint64_t power(int k, int n) {
  std::uint64_t r = 1;
  for (int i = 0; i < n; ++i) r *= static_cast<std::uint64_t>(k);
  return r;
}

// Every coloring, each answer asserted by RamseyOracle::evaluate.
std::uint64_t evaluate_all(const RamseyOracle& o) {
  const auto total = power(o.query().k, o.items()->size());
  for (std::uint64_t r = 0; r < total; ++r) o.evaluate(coloring_from_rank(o.items(), o.query().k, r));
  return total;
}

std::uint64_t evaluate_random(const RamseyOracle& o, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> color(1, o.query().k);
  for (int s = 0; s < samples; ++s) {
    std::vector<int> colors(o.items()->size());
    for (auto& c : colors) c = color(rng);
    o.evaluate(colors);
  }
  return static_cast<std::uint64_t>(samples);
}

Outcome pigeonhole() {
  Check c;
  for (int m = 1; m <= 3; ++m) {
    for (int k = 2; k <= 3; ++k) {
      const int n = k * (m - 1) + 1;
      c.expect(check_arrow(fsi(n, m, 1, k)).holds(), arrow_notation(fsi(n, m, 1, k)) + " should hold");
      if (n - 1 < m) continue;
      const auto v = check_arrow(fsi(n - 1, m, 1, k));
      c.expect(v.status == Verdict::fails && is_bad_coloring(v.query, *v.bad_coloring),
               arrow_notation(v.query) + " should fail with a bad coloring");
    }
  }
  return c.done(std::to_string(c.count()) + " verdicts, m <= 3, k <= 3");
}

Outcome ramsey_33() {
  Check c;
  ArrowOptions opts;
  opts.mode = SearchMode::exhaustive;
  const auto six = check_arrow(fsi(6, 3, 2, 2), opts);
  const auto five = check_arrow(fsi(5, 3, 2, 2), opts);
  c.expect(six.holds(), "6 -> (3)^2_2 should hold");
  c.expect(five.status == Verdict::fails, "5 -> (3)^2_2 should fail");
  std::string reason;
  c.expect(five.bad_coloring && is_bad_coloring(five.query, *five.bad_coloring, &reason),
           "bad coloring does not re-validate: " + reason);
  c.expect(oracle::subset_arrow(6, 3, 2, 2) && !oracle::subset_arrow(5, 3, 2, 2),
           "plain enumeration disagrees");
  return c.done("holds at 6 (" + std::to_string(six.explored) + " colorings), fails at 5");
}

Outcome rigidity() {
  Check c;
  auto cat = fsi_category();
  const auto a = finite_set(2);
  const auto swap = cat->hom(a, a).back();
  int checked = 0;
  for (int n = 2; n <= 5; ++n) {
    const auto chi = nonrigidity_coloring(cat, a, finite_set(n), swap);
    for (int b = 2; b <= n; ++b) {
      const auto q = fsi(n, b, 2, 2, Variant::hom);
      c.expect(check_arrow(q).status == Verdict::fails, arrow_notation(q) + " should fail");
      c.expect(is_bad_coloring(q, chi), "nonrigidity coloring is not bad for " + arrow_notation(q));
      ++checked;
    }
  }
  return c.done(std::to_string(checked) + " hom arrows with |A| = 2, |C| <= 5, all certified");
}

Outcome dual_micro() {
  Check c;
  auto dual = opposite(fss_category());
  std::ostringstream log;
  for (int n = 3; n <= 7; ++n) {
    const ArrowQuery q{dual, finite_set(n), finite_set(3), finite_set(2), 2, Variant::subobject};
    ArrowOptions bt;
    bt.mode = SearchMode::backtracking;
    const auto back = check_arrow(q, bt);
    if (n <= 6) {
      ArrowOptions ex;
      ex.budget = std::uint64_t{1} << 31;
      ex.mode = SearchMode::exhaustive;
      const auto exh = check_arrow(q, ex);
      c.expect(exh.status == back.status, "modes disagree at n = " + std::to_string(n));
      if (n <= 5) {
        c.expect(exh.holds() == oracle::partition_arrow(n, 3, 2, 2),
                 "partition enumeration disagrees at n = " + std::to_string(n));
      }
    }
    c.expect(back.status != Verdict::inconclusive, "backtracking inconclusive at n = " + std::to_string(n));
    if (back.status == Verdict::fails) {
      c.expect(is_bad_coloring(q, *back.bad_coloring), "bad coloring invalid at n = " + std::to_string(n));
    }
    log << (n > 3 ? ", " : "") << "n=" << n << " " << to_string(back.status);
  }
  return c.done(log.str());
}

Outcome ordered_hom_enumeration() {
  Check c;
  std::uint64_t tuples = 0, homs = 0;
  for (int q : {2, 3}) {
    const auto base = OrderedCarrier::natural(q);
    for (int n = 1; n <= 3; ++n) {
      for (int m = 1; m <= 3; ++m) {
        for (const auto& pi : permutations(n)) {
          for (const auto& sigma : permutations(m)) {
            std::set<std::vector<int>> listed;
            for (const auto& h : enumerate_ordered_homs(n, pi, m, sigma)) listed.insert(h.tuple);
            std::vector<int> t(m, 1);
            while (true) {
              ++tuples;
              const bool in = listed.contains(t);
              homs += in;
              c.expect(in == is_ordered_hom_oracle(base, t, pi, sigma), "discrepancy");
              int i = 0;
              while (i < m && ++t[i] > n) t[i++] = 1;
              if (i == m) break;
            }
          }
        }
      }
    }
  }
  return c.done(std::to_string(tuples) + " index tuples, " + std::to_string(homs) +
                " homomorphisms, 0 discrepancies");
}

Outcome skeleton() {
  Check c;
  auto two = ov_fin_category(OrderedCarrier::natural(2));
  auto three = ov_fin_category(OrderedCarrier::natural(3));
  int pairs = 0;
  for (const auto& x : two->objects(3)) {
    for (const auto& y : two->objects(3)) {
      const auto n2 = two->hom(x, y).size();
      const auto n3 = three->hom(three->object(x.payload), three->object(y.payload)).size();
      c.expect(n2 == n3, "hom counts differ at " + to_string(x) + ", " + to_string(y));
      ++pairs;
    }
  }
  const auto eq = skeleton_equivalence(ofba_category(), three);
  const auto fe = verify_functor(eq.e(), 3);
  const auto fh = verify_functor(eq.h(), 3);
  const auto ev = verify_equivalence(eq, 3);
  c.expect(fe.ok() && fh.ok(), "functor report not empty");
  c.expect(ev.ok(), "equivalence report not empty");
  return c.done(std::to_string(pairs) + " object pairs; " + std::to_string(ev.checks) +
                " equivalence checks, 0 violations");
}

Outcome stone_transport() {
  Check c;
  const auto eq = stone_duality().swapped();
  auto dual = eq.e().source();
  auto to_fbas = [&](int n) { return dual->object({n}); };
  auto transport = [&](int cn, int bn, int an, int k) {
    const auto a = to_fbas(an), b = to_fbas(bn);
    const auto v = check_arrow({fsi_category(), finite_set(cn), eq.e()(b), eq.e()(a), k, Variant::subobject});
    if (!v.holds()) throw PreconditionError("source arrow does not hold");
    return equivalence_transport_obj(eq, *v.finder, a, b);
  };
  const auto main = transport(6, 3, 2, 2);
  const auto sampled = evaluate_random(main, 200, sampling_seed());
  const auto full = evaluate_all(main);
  const auto small = transport(4, 2, 1, 3);
  const auto small_full = evaluate_all(small);

  int matched = 0;
  for (int cn = 1; cn <= 5; ++cn) {
    for (int bn = 1; bn <= cn; ++bn) {
      for (int an = 1; an <= bn; ++an) {
        for (auto variant : {Variant::subobject, Variant::hom}) {
          const auto left = check_arrow(fsi(cn, bn, an, 2, variant));
          const auto right = check_arrow({dual, to_fbas(cn), to_fbas(bn), to_fbas(an), 2, variant});
          c.expect(left.status == right.status,
                   "verdicts differ for " + arrow_notation(left.query) + " and " + arrow_notation(right.query));
          ++matched;
        }
      }
    }
  }
  return c.done(std::to_string(sampled) + " random + " + std::to_string(full) +
                " exhaustive colorings at 6 atoms, " + std::to_string(small_full) + " at 4 atoms; " +
                std::to_string(matched) + " matched queries agree");
}

Outcome six_node_tree_classes() {
  Check c;
  const auto adj = tree_closure_adjunction();
  auto trees = tree_category();
  const auto a = trees->object(six_node_tree());
  const auto fa = adj.left()(a);
  const auto b = fa;
  const auto left = subobject_classes(*adj.left().target(), fa, b).size();
  const auto right = subobject_classes(*trees, a, adj.right()(b)).size();
  c.expect(left == 1, "|hom(F(A), B)/~| = " + std::to_string(left));
  c.expect(right == 4, "|hom(A, B)/~| = " + std::to_string(right));
  c.expect(!check_aut_condition(adj.left(), a), "Aut-condition should fail");
  c.expect(class_phi_compat(adj, a, b).refused, "class compatibility should be refused");
  return c.done("class counts 1 and 4, Aut-condition false");
}

Outcome product_construction() {
  Check c;
  auto cat = fsi_category();
  auto first = search_ramsey_object(cat, finite_set(2), finite_set(1), 2, Variant::subobject, cat->objects(10));
  if (!first.verdict) return {false, "no first factor"};
  const auto pw = product_arrow_witness(
      *first.verdict->finder,
      search_factory(cat, finite_set(2), finite_set(1), Variant::subobject, cat->objects(10), {}),
      finite_set(1), finite_set(2), 2);
  c.expect(pw.status == Verdict::holds, "product construction did not finish");
  if (pw.status != Verdict::holds) return c.done("");
  c.expect(pw.c.payload == Payload{1, 3, 9}, "C~ = " + to_string(pw.c));
  evaluate_random(*pw.oracle, 100, sampling_seed());

  const ArrowQuery direct{pw.product, pair_object(finite_set(3), finite_set(3)),
                          pair_object(finite_set(2), finite_set(2)),
                          pair_object(finite_set(1), finite_set(1)), 2, Variant::subobject};
  const auto v = check_arrow(direct);
  c.expect(v.status == Verdict::fails, "(3,3) should fail");
  c.expect(v.bad_coloring && is_bad_coloring(direct, *v.bad_coloring), "(3,3) bad coloring invalid");
  return c.done("C~ = (3,9), t = " + std::to_string(pw.t) + ", 100 random colorings; (3,3) fails");
}

Outcome fraisse_suite() {
  Check c;
  auto ov = ov_fin_category(OrderedCarrier::natural(3));
  const auto hp = check_HP(*ov, 3);
  c.expect(hp.status == ClosureStatus::pass, "HP: " + hp.detail);
  const auto u = forgetful_functor(ov, v_fin_category(3));
  const auto rs = check_reasonable(u, 3, ordered_power_hint(ov));
  c.expect(rs.status == ClosureStatus::pass, "reasonable: " + rs.detail);
  c.expect(rs.detail.find(std::to_string(rs.checked) + " by the hint") != std::string::npos,
           "not every extension came from reasonable_extension");

  const auto forget = forgetful_functor(ofba_category(), fba_category());
  auto fba = fba_category();
  const auto a = fba->object({2});
  const auto found = find_ordering_witness(forget, a, fba->objects(5), 5);
  c.expect(found.witness.has_value(), "no ordering witness within 5 atoms");
  if (found.witness) c.expect(check_ordering_witness(forget, a, *found.witness).witness, "witness invalid");
  return c.done("HP " + std::to_string(hp.checked) + " substructures, " + std::to_string(rs.checked) +
                " extensions, ordering witness " + (found.witness ? to_string(*found.witness) : "-"));
}

Outcome law_suite() {
  Check c;
  std::size_t checks = 0;
  auto lawful = [&](const LawReport& r, const std::string& what) {
    checks += r.checks;
    c.expect(r.ok(), what + ": " + (r.ok() ? "" : r.violations.front().law + " " + r.violations.front().detail));
  };
  const auto vs2 = vector_space_categories(2);
  const std::vector<std::pair<CategoryPtr, int>> cats = {
      {fsi_category(), 4},
      {fss_category(), 4},
      {opposite(fss_category()), 4},
      {fbas_category(), 3},
      {opposite(fbas_category()), 3},
      {fba_category(), 3},
      {ofba_category(), 3},
      {ov_fin_category(OrderedCarrier::natural(3)), 3},
      {v_fin_category(3), 3},
      {tree_category(), 5},
      {tree_category(true), 5},
      {vs2.injective, 3},
      {vs2.surjective, 3},
      {vector_space_categories(3).injective, 2},
      {product(fsi_category(), fss_category()), 2},
      {unit_category(), 1},
  };
  for (const auto& [cat, bound] : cats) lawful(verify_category_laws(*cat, bound), cat->tag());

  const auto stone = stone_duality();
  const auto skel = skeleton_equivalence(ofba_category(), ov_fin_category(OrderedCarrier::natural(3)));
  const auto vec = vector_space_duality(2);
  lawful(verify_functor(forgetful_functor(ofba_category(), fba_category()), 3), "forgetful");
  for (const auto* eq : {&stone, &skel, &vec}) {
    const int bound = eq == &vec ? 2 : 3;
    lawful(verify_equivalence(*eq, bound), eq->name());
    lawful(verify_adjunction(eq->as_adjunction(), bound), eq->name() + " as adjunction");
    lawful(verify_adjunction(eq->swapped().as_adjunction(), bound), eq->name() + " swapped");
  }
  lawful(verify_adjunction(tree_closure_adjunction(), 4), "tree closure");
  lawful(verify_adjunction(identity_adjunction(fsi_category()), 4), "identity");

  auto fsi_cat = fsi_category();
  const auto homs = fsi_cat->hom(finite_set(1), finite_set(2));
  const auto two = finite_set(2);
  const auto swap = fsi_cat->hom(two, two).back();
  const auto adj = stone.as_adjunction();
  const std::vector<std::pair<std::string, LawReport>> faults = {
      {"composition", verify_category_laws(*corrupted_composition(fsi_cat, fsi_cat->hom(two, finite_set(3)).front(), 0, 1), 3)},
      {"morphism map", verify_functor(with_morphism_override(stone.e(), homs[0], stone.e()(homs[1])), 3)},
      {"unit", verify_adjunction(AdjunctionImpl("bad unit", adj.left(), adj.right(),
                                                with_component_override(adj.unit(), two, swap), adj.counit()),
                                 3)},
      {"eta", verify_equivalence(EquivalenceImpl("bad eta", stone.e(), stone.h(),
                                                 with_component_override(stone.eta(), two, swap), stone.eps()),
                                 3)},
  };
  for (const auto& [name, r] : faults) c.expect(!r.ok(), "fault '" + name + "' not detected");
  return c.done(std::to_string(checks) + " law checks, 0 violations; " + std::to_string(faults.size()) +
                " faults detected");
}

Outcome reproducibility(const std::string& scenario_dir) {
  Check c;
  int runs = 0;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(scenario_dir)) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    std::ifstream in(path);
    const auto s = nlohmann::json::parse(in);
    if (!s.value("deterministic", false)) continue;
    const auto first = run_scenario(s);
    const auto second = run_scenario(s);
    c.expect(reproducible_payload(first.envelope) == reproducible_payload(second.envelope),
             path.filename().string() + " is not reproducible");
    const auto r = revalidate(first.envelope);
    c.expect(r.valid, path.filename().string() + ": " + r.reason);
    ++runs;
  }
  return c.done(std::to_string(runs) + " deterministic scenarios reproduced and revalidated");
}

}  // namespace

int main(int argc, char** argv) {
  const std::string scenario_dir = argc > 1 ? argv[1] : ARROWLAB_SCENARIO_DIR;
  struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "pigeonhole arrows", 1, pigeonhole},
      {2, "R(3,3) endpoint", 10, ramsey_33},
      {3, "rigidity obstruction", 5, rigidity},
      {4, "dual micro-Ramsey", 300, dual_micro},
      {5, "ordered hom characterization", 60, ordered_hom_enumeration},
      {6, "skeleton equivalence", 60, skeleton},
      {7, "Stone transport", 300, stone_transport},
      {8, "six-node tree class counts", 1, six_node_tree_classes},
      {9, "product construction", 120, product_construction},
      {10, "HP / reasonable / ordering", 300, fraisse_suite},
      {11, "law suite", 120, law_suite},
      {12, "reproducibility", 600, [&] { return reproducibility(scenario_dir); }},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = cr.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs > cr.limit_s) {
      out = {false, "took " + std::to_string(secs) + " s, limit " + std::to_string(cr.limit_s) + " s"};
    }
    failed += !out.ok;
    std::printf("%s %2d %-30s %8.2f s  %s\n", out.ok ? "PASS" : "FAIL", cr.id, cr.name.c_str(), secs,
                out.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}

#include "arrowlab/scenario.hpp"

#include <chrono>
#include <cstdlib>
#include <random>
#include <set>
#include <sstream>

#include "arrowlab/arrow.hpp"
#include "arrowlab/boolean.hpp"
#include "arrowlab/category_ops.hpp"
#include "arrowlab/derived.hpp"
#include "arrowlab/fraisse.hpp"
#include "arrowlab/json_io.hpp"
#include "arrowlab/ordered_power.hpp"
#include "arrowlab/transport.hpp"
#include "arrowlab/trees.hpp"
#include "arrowlab/vector_space.hpp"

namespace arrowlab {

using nlohmann::json;

namespace {

const std::set<std::string> kCommon = {"kind", "description", "out",  "mode",
                                       "budget", "jobs",      "deterministic"};

const std::map<std::string, std::set<std::string>> kKindFields = {
    {"arrow", {"category", "a", "b", "c", "k", "variant", "tabulate"}},
    {"dual-arrow", {"category", "a", "b", "c", "k", "variant", "tabulate"}},
    {"search", {"category", "a", "b", "k", "variant", "max_grade", "tabulate"}},
    {"product-arrow", {"left", "right", "a1", "b1", "a2", "b2", "k", "max_grade", "samples"}},
    {"transport", {"construction", "category", "a", "b", "c", "k", "variant", "samples", "base", "p"}},
    {"laws", {"subject", "category", "bound", "base", "p"}},
    {"fraisse", {"property", "category", "bound", "candidate_grade", "base"}},
    {"ordering", {"base", "a", "max_grade"}},
};

[[noreturn]] void fail_at(const std::string& where, const std::string& what) {
  throw ScenarioError(where + ": " + what);
}

const json& field(const json& s, const std::string& key) {
  if (!s.contains(key)) fail_at("scenario." + key, "missing required field");
  return s[key];
}

int int_field(const json& s, const std::string& key, std::optional<int> fallback = std::nullopt) {
  if (!s.contains(key)) {
    if (fallback) return *fallback;
    fail_at("scenario." + key, "missing required field");
  }
  if (!s[key].is_number_integer()) fail_at("scenario." + key, "expected an integer");
  return s[key].get<int>();
}

std::string string_field(const json& s, const std::string& key,
                         std::optional<std::string> fallback = std::nullopt) {
  if (!s.contains(key)) {
    if (fallback) return *fallback;
    fail_at("scenario." + key, "missing required field");
  }
  if (!s[key].is_string()) fail_at("scenario." + key, "expected a string");
  return s[key].get<std::string>();
}

CategoryPtr category_field(const json& s, const std::string& key) {
  try {
    return category_from_json(field(s, key));
  } catch (const ScenarioError&) {
    throw;
  } catch (const DomainError& e) {
    fail_at("scenario." + key, e.what());
  }
}

// An integer n stands for the payload [n].
ObjectId object_field(const FiniteCategory& cat, const json& s, const std::string& key) {
  const auto& v = field(s, key);
  Payload p;
  if (v.is_number_integer()) {
    p = {v.get<int>()};
  } else if (v.is_array() && std::ranges::all_of(v, [](const json& x) { return x.is_number_integer(); })) {
    p = v.get<Payload>();
  } else {
    fail_at("scenario." + key, "expected an integer or an array of integers");
  }
  try {
    return cat.object(p);
  } catch (const DomainError& e) {
    fail_at("scenario." + key, e.what());
  }
}

int k_field(const json& s) {
  const int k = int_field(s, "k");
  if (k < 2) fail_at("scenario.k", "color count must be at least 2, got " + std::to_string(k));
  return k;
}

Variant variant_field(const json& s, Variant fallback = Variant::subobject) {
  if (!s.contains("variant")) return fallback;
  try {
    return parse_variant(string_field(s, "variant"));
  } catch (const DomainError& e) {
    fail_at("scenario.variant", e.what());
  }
}

ArrowOptions options_of(const json& s) {
  ArrowOptions o;
  if (s.contains("mode")) {
    try {
      o.mode = parse_mode(string_field(s, "mode"));
    } catch (const DomainError& e) {
      fail_at("scenario.mode", e.what());
    }
  }
  if (s.contains("budget")) {
    if (!s["budget"].is_number_unsigned()) fail_at("scenario.budget", "expected a non-negative integer");
    o.budget = s["budget"].get<std::uint64_t>();
  }
  o.jobs = int_field(s, "jobs", 0);
  if (s.contains("deterministic")) {
    if (!s["deterministic"].is_boolean()) fail_at("scenario.deterministic", "expected a boolean");
    o.deterministic = s["deterministic"].get<bool>();
  }
  o.tabulate = !s.contains("tabulate") || s["tabulate"].get<bool>();
  return o;
}

void validate_shape(const json& s) {
  if (!s.is_object()) fail_at("scenario", "expected a JSON object");
  const auto kind = string_field(s, "kind");
  auto it = kKindFields.find(kind);
  if (it == kKindFields.end()) fail_at("scenario.kind", "unknown kind '" + kind + "'");
  for (const auto& [key, value] : s.items()) {
    if (!kCommon.contains(key) && !it->second.contains(key)) {
      fail_at("scenario." + key, "unknown field for kind '" + kind + "'");
    }
  }
  if (s.contains("tabulate") && !s["tabulate"].is_boolean()) {
    fail_at("scenario.tabulate", "expected a boolean");
  }
  if (s.contains("out") && !s["out"].is_string()) fail_at("scenario.out", "expected a string");
}

// --- certificates ---------------------------------------------------------

json query_json(const ArrowQuery& q) {
  return {{"category", q.cat->descriptor()}, {"a", q.a.payload}, {"b", q.b.payload},
          {"c", q.c.payload},          {"k", q.k},          {"variant", to_string(q.variant)}};
}

ArrowQuery query_from_json(const json& j) {
  ArrowQuery q;
  q.cat = category_from_json(j.at("category"));
  q.a = q.cat->object(j.at("a").get<Payload>());
  q.b = q.cat->object(j.at("b").get<Payload>());
  q.c = q.cat->object(j.at("c").get<Payload>());
  q.k = j.at("k").get<int>();
  q.variant = parse_variant(j.at("variant").get<std::string>());
  return q;
}

json bad_coloring_json(const Coloring& chi, const ArrowQuery& q) {
  json entries = json::array();
  const auto& items = chi.items->items();
  for (std::size_t i = 0; i < items.size(); ++i) entries.push_back({items[i].payload, chi.colors[i]});
  return {{"type", "bad-coloring"}, {"query", query_json(q)}, {"coloring", entries}};
}

json table_json(const std::vector<WitnessTableEntry>& table, const ArrowQuery& q) {
  json entries = json::array();
  for (const auto& e : table) entries.push_back({e.coloring_rank, e.color, e.w.payload});
  return {{"type", "witness-table"}, {"query", query_json(q)}, {"entries", entries}};
}

bool small_space(int items, int k) {
  std::uint64_t total = 1;
  for (int i = 0; i < items; ++i) {
    if ((total *= static_cast<std::uint64_t>(k)) > kMaxTabulatedColorings) return false;
  }
  return true;
}

json samples_json(const RamseyOracle& oracle, int samples) {
  const auto seed = sampling_seed();
  std::mt19937_64 rng(seed);
  const int k = oracle.query().k;
  std::uniform_int_distribution<int> color(1, k);
  json entries = json::array();
  for (int s = 0; s < samples; ++s) {
    std::vector<int> colors(oracle.items()->size());
    for (auto& c : colors) c = color(rng);
    const auto ans = oracle.evaluate(colors);
    entries.push_back({colors, ans.color, ans.w.payload});
  }
  return {{"type", "samples"},
          {"query", query_json(oracle.query())},
          {"seed", seed},
          {"entries", entries}};
}

// Table when the coloring space is small enough, samples otherwise.
json oracle_certificate(const RamseyOracle& oracle, int samples, int jobs) {
  if (small_space(oracle.items()->size(), oracle.query().k)) {
    return table_json(tabulate_witnesses(oracle, jobs), oracle.query());
  }
  return samples_json(oracle, samples);
}

json verdict_certificate(const ArrowVerdict& v) {
  switch (v.status) {
    case Verdict::fails:
      return bad_coloring_json(*v.bad_coloring, v.query);
    case Verdict::holds:
      if (!v.table.empty()) return table_json(v.table, v.query);
      return {{"type", "exhaustive-count"}, {"query", query_json(v.query)}, {"explored", v.explored}};
    case Verdict::inconclusive:
      break;
  }
  return {{"type", "none"},
          {"query", query_json(v.query)},
          {"explored", v.explored},
          {"budget", v.budget}};
}

int exit_code(const std::string& verdict) {
  if (verdict == "holds" || verdict == "pass") return 0;
  if (verdict == "fails" || verdict == "fail") return 1;
  return 2;
}

struct Outcome {
  std::string verdict;
  std::string query;
  json certificate;
};

// --- kinds -----------------------------------------------------------------

Outcome run_arrow(const json& s, bool dual) {
  auto cat = category_field(s, "category");
  if (dual) cat = opposite(cat);
  ArrowQuery q{cat, object_field(*cat, s, "c"), object_field(*cat, s, "b"),
               object_field(*cat, s, "a"), k_field(s), variant_field(s)};
  auto v = check_arrow(q, options_of(s));
  return {to_string(v.status), arrow_notation(q), verdict_certificate(v)};
}

Outcome run_search(const json& s) {
  auto cat = category_field(s, "category");
  const auto a = object_field(*cat, s, "a");
  const auto b = object_field(*cat, s, "b");
  const int k = k_field(s);
  const auto variant = variant_field(s);
  auto res = search_ramsey_object(cat, b, a, k, variant, cat->objects(int_field(s, "max_grade")),
                                  options_of(s));
  json log = json::array();
  for (const auto& step : res.log) {
    log.push_back({{"c", step.c.payload},
                   {"status", step.skipped ? "skipped" : to_string(step.status)}});
  }
  ArrowQuery shown{cat, res.c.value_or(b), b, a, k, variant};
  json cert = {{"type", "search"}, {"log", log}, {"last_grade", res.last_grade}};
  if (res.verdict) cert["found"] = verdict_certificate(*res.verdict);
  return {res.c ? "holds" : "inconclusive",
          res.c ? arrow_notation(shown) : "? -> (" + to_string(b) + ")^" + to_string(a) + "_" + std::to_string(k),
          cert};
}

Outcome run_product(const json& s) {
  auto left = category_field(s, "left");
  auto right = category_field(s, "right");
  const auto a1 = object_field(*left, s, "a1");
  const auto b1 = object_field(*left, s, "b1");
  const auto a2 = object_field(*right, s, "a2");
  const auto b2 = object_field(*right, s, "b2");
  const int k = k_field(s);
  const int max_grade = int_field(s, "max_grade");
  auto opts = options_of(s);
  opts.tabulate = false;
  const std::string pending = "? -> (" + to_string(pair_object(b1, b2)) + ")^" +
                              to_string(pair_object(a1, a2)) + "_" + std::to_string(k);
  auto first = search_ramsey_object(left, b1, a1, k, Variant::subobject, left->objects(max_grade), opts);
  if (!first.verdict) {
    return {"inconclusive", pending, {{"type", "none"}, {"reason", "no first-factor object found"}}};
  }
  auto pw = product_arrow_witness(*first.verdict->finder,
                                  search_factory(right, b2, a2, Variant::subobject,
                                                 right->objects(max_grade), opts),
                                  a2, b2, k);
  if (pw.status != Verdict::holds) {
    return {"inconclusive", pending,
            {{"type", "none"}, {"reason", "no second-factor object for " + std::to_string(pw.t) + " items"}}};
  }
  auto cert = oracle_certificate(*pw.oracle, int_field(s, "samples", 100), opts.jobs);
  cert["t"] = pw.t;
  return {"holds", arrow_notation(pw.oracle->query()), cert};
}

Outcome run_transport(const json& s) {
  const auto construction = string_field(s, "construction");
  const int k = k_field(s);
  auto opts = options_of(s);
  opts.tabulate = false;
  const int samples = int_field(s, "samples", 200);

  std::optional<EquivalenceImpl> eq;
  std::optional<AdjunctionImpl> adj;
  Variant variant = variant_field(s);
  if (construction == "identity") {
    auto cat = category_field(s, "category");
    eq = identity_equivalence(cat);
  } else if (construction == "stone") {
    eq = stone_duality().swapped();
  } else if (construction == "skeleton") {
    eq = skeleton_equivalence(ofba_category(),
                              ov_fin_category(OrderedCarrier::natural(int_field(s, "base"))));
  } else if (construction == "vector") {
    eq = vector_space_duality(int_field(s, "p"));
  } else if (construction == "tree") {
    adj = tree_closure_adjunction();
    if (variant != Variant::hom) fail_at("scenario.variant", "tree transport is stated for hom arrows");
  } else {
    fail_at("scenario.construction", "unknown construction '" + construction + "'");
  }
  if (eq && variant == Variant::hom) adj = eq->as_adjunction();

  const FunctorImpl& forward = adj ? adj->left() : eq->e();
  const auto& c_cat = *forward.source();
  const auto& d_cat = forward.target();
  const auto a = object_field(c_cat, s, "a");
  const auto b = object_field(c_cat, s, "b");
  ArrowQuery dq{d_cat, object_field(*d_cat, s, "c"), forward(b), forward(a), k, variant};
  auto dv = check_arrow(dq, opts);
  if (!dv.holds()) {
    return {"inconclusive", arrow_notation(dq),
            {{"type", "source-oracle"}, {"query", query_json(dq)}, {"verdict", to_string(dv.status)}}};
  }
  auto oracle = variant == Variant::hom ? adjunction_transport_hom(*adj, *dv.finder, a, b)
                                        : equivalence_transport_obj(*eq, *dv.finder, a, b);
  auto cert = oracle_certificate(oracle, samples, opts.jobs);
  cert["source"] = query_json(dq);
  return {"holds", arrow_notation(oracle.query()), cert};
}

json law_json(const LawReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back({{"law", v.law}, {"detail", v.detail}});
  return {{"subject", r.subject}, {"bound", r.bound}, {"checks", r.checks}, {"violations", violations}};
}

Outcome run_laws(const json& s) {
  const auto subject = string_field(s, "subject");
  const int bound = int_field(s, "bound");
  std::vector<LawReport> reports;
  if (subject == "category") {
    reports.push_back(verify_category_laws(*category_field(s, "category"), bound));
  } else if (subject == "stone") {
    const auto eq = stone_duality();
    reports.push_back(verify_equivalence(eq, bound));
    reports.push_back(verify_adjunction(eq.as_adjunction(), bound));
  } else if (subject == "skeleton") {
    const auto eq = skeleton_equivalence(
        ofba_category(), ov_fin_category(OrderedCarrier::natural(int_field(s, "base", 3))));
    reports.push_back(verify_equivalence(eq, bound));
    reports.push_back(verify_adjunction(eq.as_adjunction(), bound));
  } else if (subject == "vector") {
    reports.push_back(verify_equivalence(vector_space_duality(int_field(s, "p")), bound));
  } else if (subject == "tree-closure") {
    reports.push_back(verify_adjunction(tree_closure_adjunction(), bound));
  } else {
    fail_at("scenario.subject", "unknown subject '" + subject + "'");
  }
  json out = json::array();
  bool ok = true;
  for (const auto& r : reports) {
    ok = ok && r.ok();
    out.push_back(law_json(r));
  }
  return {ok ? "pass" : "fail", "laws of " + subject + " at bound " + std::to_string(bound),
          {{"type", "law-report"}, {"reports", out}}};
}

FunctorImpl forgetful_for_base(int base) {
  if (base == 2) return forgetful_functor(ofba_category(), fba_category());
  return forgetful_functor(ov_fin_category(OrderedCarrier::natural(base)), v_fin_category(base));
}

json closure_json(const ClosureReport& r) {
  return {{"type", "closure-report"}, {"property", to_string(r.property)},
          {"bound", r.bound},         {"status", to_string(r.status)},
          {"checked", r.checked},     {"detail", r.detail},
          {"counterexample", r.counterexample}, {"certificate", r.certificate}};
}

Outcome run_fraisse(const json& s) {
  const auto property = string_field(s, "property");
  const int bound = int_field(s, "bound");
  ClosureReport r;
  if (property == "HP" || property == "JEP" || property == "AP") {
    auto cat = category_field(s, "category");
    if (property == "HP") {
      r = check_HP(*cat, bound);
    } else {
      const auto candidates = cat->objects(int_field(s, "candidate_grade"));
      const auto budget = options_of(s).budget;
      r = property == "JEP" ? check_JEP(*cat, bound, candidates, budget)
                            : check_AP(*cat, bound, candidates, budget);
    }
  } else if (property == "ORDER-EXPANSION" || property == "REASONABLE") {
    const auto u = forgetful_for_base(int_field(s, "base"));
    r = property == "REASONABLE" ? check_reasonable(u, bound, ordered_power_hint(u.source()))
                                 : check_order_expansion(u, bound);
  } else {
    fail_at("scenario.property", "unknown property '" + property + "'");
  }
  return {to_string(r.status), property + " at bound " + std::to_string(bound), closure_json(r)};
}

Outcome run_ordering(const json& s) {
  const auto u = forgetful_for_base(int_field(s, "base", 2));
  const auto a = object_field(*u.target(), s, "a");
  auto res = find_ordering_witness(u, a, u.target()->objects(int_field(s, "max_grade")),
                                   options_of(s).budget);
  json cert = {{"type", "ordering-witness"},
               {"base", int_field(s, "base", 2)},
               {"a", a.payload},
               {"tried", res.tried},
               {"last_grade", res.last_grade},
               {"witness", res.witness ? json(res.witness->payload) : json(nullptr)}};
  return {res.witness ? "pass" : "inconclusive", "ordering witness for " + to_string(a), cert};
}

Outcome dispatch(const json& s) {
  const auto kind = s["kind"].get<std::string>();
  if (kind == "arrow") return run_arrow(s, false);
  if (kind == "dual-arrow") return run_arrow(s, true);
  if (kind == "search") return run_search(s);
  if (kind == "product-arrow") return run_product(s);
  if (kind == "transport") return run_transport(s);
  if (kind == "laws") return run_laws(s);
  if (kind == "fraisse") return run_fraisse(s);
  return run_ordering(s);
}

// --- revalidation -------------------------------------------------------------

Revalidation invalid(std::string reason) { return {false, std::move(reason)}; }

Revalidation check_bad_coloring(const json& cert) {
  const auto q = query_from_json(cert.at("query"));
  auto items = std::make_shared<const ItemSet>(q.cat, q.a, q.c, q.variant);
  std::vector<int> colors(items->size(), 0);
  for (const auto& entry : cert.at("coloring")) {
    const Morphism f{q.a, q.c, entry.at(0).get<Payload>()};
    if (!q.cat->contains(f)) return invalid("colored item " + to_string(f) + " is not a morphism");
    const int idx = items->index_of(f);
    const int color = entry.at(1).get<int>();
    if (color < 1 || color > q.k) return invalid("color " + std::to_string(color) + " out of range");
    if (colors[idx] != 0) return invalid("item " + to_string(f) + " colored twice");
    colors[idx] = color;
  }
  if (std::ranges::find(colors, 0) != colors.end()) return invalid("coloring is not total");
  std::string reason;
  if (!is_bad_coloring(q, Coloring{items, colors, q.k}, &reason)) return invalid(reason);
  return {true, "bad coloring of " + std::to_string(items->size()) + " items re-checked"};
}

Revalidation check_answers(const ArrowQuery& q, std::shared_ptr<const ItemSet> items,
                           const std::vector<int>& colors, int color, const Payload& w,
                           const std::string& label) {
  const Morphism wm{q.b, q.c, w};
  if (!q.cat->contains(wm)) return invalid(label + ": " + to_string(wm) + " is not a morphism");
  if (color < 1 || color > q.k) return invalid(label + ": color out of range");
  if (!is_monochromatic(q, Coloring{std::move(items), colors, q.k}, {color, wm})) {
    return invalid(label + ": witness " + to_string(wm) + " is not monochromatic in color " +
                   std::to_string(color));
  }
  return {true, ""};
}

Revalidation check_table(const json& cert) {
  const auto q = query_from_json(cert.at("query"));
  auto items = std::make_shared<const ItemSet>(q.cat, q.a, q.c, q.variant);
  if (!small_space(items->size(), q.k)) return invalid("coloring space too large for a table");
  const auto& entries = cert.at("entries");
  std::uint64_t total = 1;
  for (int i = 0; i < items->size(); ++i) total *= q.k;
  if (entries.size() != total) {
    return invalid("table has " + std::to_string(entries.size()) + " entries, expected " +
                   std::to_string(total));
  }
  for (std::uint64_t r = 0; r < total; ++r) {
    const auto& e = entries[r];
    if (e.at(0).get<std::uint64_t>() != r) return invalid("table entry " + std::to_string(r) + " out of order");
    const auto chi = coloring_from_rank(items, q.k, r);
    auto res = check_answers(q, items, chi.colors, e.at(1).get<int>(), e.at(2).get<Payload>(),
                             "coloring " + std::to_string(r));
    if (!res.valid) return res;
  }
  return {true, "witness table with " + std::to_string(total) + " colorings re-checked"};
}

Revalidation check_samples(const json& cert) {
  const auto q = query_from_json(cert.at("query"));
  auto items = std::make_shared<const ItemSet>(q.cat, q.a, q.c, q.variant);
  std::size_t i = 0;
  for (const auto& e : cert.at("entries")) {
    auto colors = e.at(0).get<std::vector<int>>();
    if (static_cast<int>(colors.size()) != items->size()) return invalid("sample coloring is not total");
    for (int c : colors) {
      if (c < 1 || c > q.k) return invalid("sample color out of range");
    }
    auto res = check_answers(q, items, colors, e.at(1).get<int>(), e.at(2).get<Payload>(),
                             "sample " + std::to_string(i++));
    if (!res.valid) return res;
  }
  return {true, std::to_string(i) + " sampled answers re-checked"};
}

Revalidation check_closure(const json& cert, const json& scenario) {
  const auto property = cert.at("property").get<std::string>();
  const auto status = cert.at("status").get<std::string>();
  if ((property == "JEP" || property == "AP") && status == "pass") {
    auto cat = category_from_json(scenario.at("category"));
    for (const auto& e : cert.at("certificate")) {
      if (property == "JEP") {
        const auto a = cat->object(e.at(0).get<Payload>());
        const auto b = cat->object(e.at(1).get<Payload>());
        const auto d = cat->object(e.at(2).get<Payload>());
        if (!cat->has_arrow(a, d) || !cat->has_arrow(b, d)) {
          return invalid("no joint embedding of " + to_string(a) + ", " + to_string(b) + " into " + to_string(d));
        }
        continue;
      }
      auto mor = [&](const json& m) {
        return Morphism{cat->object(m.at("dom").get<Payload>()), cat->object(m.at("cod").get<Payload>()),
                        m.at("payload").get<Payload>()};
      };
      const auto f = mor(e.at("f")), g = mor(e.at("g")), u = mor(e.at("u")), v = mor(e.at("v"));
      for (const auto* m : {&f, &g, &u, &v}) {
        if (!cat->contains(*m)) return invalid(to_string(*m) + " is not a morphism");
      }
      if (cat->compose(u, f) != cat->compose(v, g)) {
        return invalid("amalgam of " + to_string(f) + ", " + to_string(g) + " does not commute");
      }
    }
    return {true, std::to_string(cert.at("certificate").size()) + " " + property + " entries re-checked"};
  }
  auto rerun = run_scenario(scenario).envelope.at("certificate");
  if (rerun != cert) return invalid(property + " report differs on re-run");
  return {true, property + " report reproduced"};
}

std::string describe_certificate(const json& cert) {
  const auto type = cert.value("type", "");
  std::ostringstream out;
  if (type == "bad-coloring") {
    out << "bad coloring of " << cert["coloring"].size() << " items";
  } else if (type == "witness-table") {
    out << "witness table with " << cert["entries"].size() << " entries";
  } else if (type == "samples") {
    out << cert["entries"].size() << " sampled oracle answers (seed " << cert["seed"].dump() << ")";
  } else if (type == "exhaustive-count") {
    out << "exhaustive search over " << cert["explored"].dump() << " colorings, no table";
  } else if (type == "none") {
    out << "none";
    if (cert.contains("explored")) out << " (" << cert["explored"].dump() << " explored)";
    if (cert.contains("reason")) out << " (" << cert["reason"].get<std::string>() << ")";
  } else if (type == "search") {
    out << cert["log"].size() << " candidates tried, last grade " << cert["last_grade"].dump();
    if (cert.contains("found")) out << "; " << describe_certificate(cert["found"]);
  } else if (type == "source-oracle") {
    out << "source arrow " << cert["verdict"].get<std::string>();
  } else if (type == "law-report") {
    std::size_t checks = 0, violations = 0;
    for (const auto& r : cert["reports"]) {
      checks += r["checks"].get<std::size_t>();
      violations += r["violations"].size();
    }
    out << cert["reports"].size() << " law reports, " << checks << " checks, " << violations
        << " violations";
  } else if (type == "closure-report") {
    out << cert["detail"].get<std::string>();
  } else if (type == "ordering-witness") {
    out << "witness " << cert["witness"].dump() << " after " << cert["tried"].dump() << " candidates";
  } else {
    out << type;
  }
  return out.str();
}

}  // namespace

std::string command_for_kind(const std::string& kind) {
  if (kind == "dual-arrow" || kind == "product-arrow") return "arrow";
  return kind;
}

std::uint64_t sampling_seed() {
  const char* env = std::getenv("ARROWLAB_SEED");
  if (!env || !*env) return 0;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw ScenarioError("ARROWLAB_SEED: expected a non-negative integer");
  }
}

std::string scenario_hash(const json& scenario) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : scenario.dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

RunResult run_scenario(json scenario, const RunOverrides& ov) {
  validate_shape(scenario);
  if (ov.mode) scenario["mode"] = *ov.mode;
  if (ov.budget) scenario["budget"] = *ov.budget;
  if (ov.jobs) scenario["jobs"] = *ov.jobs;
  if (ov.deterministic) scenario["deterministic"] = *ov.deterministic;
  if (ov.k) scenario["k"] = *ov.k;
  if (ov.variant) scenario["variant"] = *ov.variant;
  validate_shape(scenario);

  const auto start = std::chrono::steady_clock::now();
  const auto outcome = dispatch(scenario);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  const auto opts = options_of(scenario);

  RunResult r;
  r.envelope = {{"tool", kToolName},
                {"version", kToolVersion},
                {"scenario_hash", scenario_hash(scenario)},
                {"scenario", scenario},
                {"kind", scenario["kind"]},
                {"query", outcome.query},
                {"verdict", outcome.verdict},
                {"mode", to_string(opts.mode)},
                {"deterministic", opts.deterministic},
                {"certificate", outcome.certificate},
                {"wall_clock_ms",
                 std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()}};
  r.exit_code = exit_code(outcome.verdict);
  return r;
}

std::string reproducible_payload(const json& envelope) {
  json copy = envelope;
  copy.erase("wall_clock_ms");
  return copy.dump();
}

Revalidation revalidate(const json& envelope) {
  try {
    for (const char* key : {"tool", "version", "scenario_hash", "scenario", "verdict", "certificate"}) {
      if (!envelope.contains(key)) return invalid(std::string("envelope has no '") + key + "' field");
    }
    if (envelope["tool"] != kToolName) return invalid("not an arrowlab envelope");
    if (envelope["scenario_hash"] != scenario_hash(envelope["scenario"])) {
      return invalid("scenario hash does not match the embedded scenario");
    }
    const auto verdict = envelope["verdict"].get<std::string>();
    const json* cert = &envelope["certificate"];
    if (cert->value("type", "") == "search") {
      if (!cert->contains("found")) {
        return {verdict == "inconclusive", "search found no object; nothing to re-check"};
      }
      cert = &(*cert)["found"];
    }
    const auto type = cert->value("type", "");
    if (type == "bad-coloring") {
      if (verdict != "fails") return invalid("bad coloring attached to verdict " + verdict);
      return check_bad_coloring(*cert);
    }
    if (type == "witness-table" || type == "samples") {
      if (verdict != "holds") return invalid("witness answers attached to verdict " + verdict);
      return type == "samples" ? check_samples(*cert) : check_table(*cert);
    }
    if (type == "none" || type == "source-oracle") {
      if (verdict != "inconclusive") return invalid("empty certificate attached to verdict " + verdict);
      return {true, "inconclusive verdict makes no claim"};
    }
    if (type == "exhaustive-count") {
      return invalid("coloring space too large for a witness table; holds cannot be re-checked without search");
    }
    if (type == "law-report") {
      auto rerun = run_scenario(envelope["scenario"]).envelope;
      if (rerun["certificate"] != *cert || rerun["verdict"] != verdict) {
        return invalid("law report differs on re-run");
      }
      return {true, "law report reproduced"};
    }
    if (type == "closure-report") {
      if (cert->at("status") != verdict) return invalid("closure status does not match verdict");
      return check_closure(*cert, envelope["scenario"]);
    }
    if (type == "ordering-witness") {
      if ((*cert)["witness"].is_null()) {
        return {verdict == "inconclusive", "no witness recorded"};
      }
      const auto u = forgetful_for_base(cert->at("base").get<int>());
      const auto a = u.target()->object(cert->at("a").get<Payload>());
      const auto b = u.target()->object(cert->at("witness").get<Payload>());
      if (!u.target()->has_arrow(a, b)) return invalid("witness does not contain " + to_string(a));
      const auto check = check_ordering_witness(u, a, b);
      if (!check.witness) {
        return invalid("expansion " + to_string(check.refuting->first) + " does not embed into " +
                       to_string(check.refuting->second));
      }
      return {true, "every expansion of " + to_string(a) + " embeds into every expansion of " + to_string(b)};
    }
    return invalid("unknown certificate type '" + type + "'");
  } catch (const std::exception& e) {
    return invalid(std::string("corrupted certificate: ") + e.what());
  }
}

std::string report(const json& envelope) {
  std::ostringstream out;
  out << envelope.value("tool", "?") << " " << envelope.value("version", "?") << "\n";
  out << "scenario     " << envelope.value("scenario_hash", "?") << "\n";
  out << "kind         " << envelope.value("kind", "?") << "\n";
  out << "query        " << envelope.value("query", "?") << "\n";
  out << "verdict      " << envelope.value("verdict", "?") << "\n";
  out << "mode         " << envelope.value("mode", "?") << "\n";
  if (envelope.contains("certificate")) {
    out << "certificate  " << describe_certificate(envelope["certificate"]) << "\n";
  }
  return out.str();
}

}  // namespace arrowlab

#include "arrowlab/arrow.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <set>

#include "arrowlab/category_ops.hpp"
#include "arrowlab/derived.hpp"

namespace arrowlab {

std::string to_string(Variant v) { return v == Variant::hom ? "hom" : "subobject"; }

Variant parse_variant(const std::string& s) {
  if (s == "hom") return Variant::hom;
  if (s == "subobject") return Variant::subobject;
  throw DomainError("unknown variant '" + s + "' (expected hom or subobject)");
}

std::string to_string(SearchMode m) {
  return m == SearchMode::exhaustive ? "exhaustive" : "backtracking";
}

SearchMode parse_mode(const std::string& s) {
  if (s == "exhaustive") return SearchMode::exhaustive;
  if (s == "backtracking") return SearchMode::backtracking;
  throw DomainError("unknown mode '" + s + "' (expected exhaustive or backtracking)");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

ItemSet::ItemSet(CategoryPtr cat, ObjectId a, ObjectId c, Variant variant)
    : cat_(std::move(cat)), a_(std::move(a)), c_(std::move(c)), variant_(variant) {
  auto homs = cat_->hom(a_, c_);
  if (variant_ == Variant::hom) {
    aut_ = {cat_->identity(a_)};
    items_ = homs;
    for (std::size_t i = 0; i < items_.size(); ++i) index_[items_[i].payload] = static_cast<int>(i);
    return;
  }
  aut_ = automorphisms(*cat_, a_);
  std::map<Payload, Payload> rep_of;
  std::set<Payload> reps;
  for (const auto& f : homs) {
    auto rep = canonical_representative(*cat_, f, aut_);
    rep_of[f.payload] = rep.payload;
    reps.insert(rep.payload);
  }
  std::map<Payload, int> rep_index;
  for (const auto& f : homs) {
    if (reps.contains(f.payload)) {
      rep_index[f.payload] = static_cast<int>(items_.size());
      items_.push_back(f);
    }
  }
  for (const auto& [f, rep] : rep_of) index_[f] = rep_index.at(rep);
}

int ItemSet::index_of(const Morphism& f) const {
  auto it = index_.find(f.payload);
  if (it == index_.end() || !(f.dom == a_) || !(f.cod == c_)) {
    throw DomainError("not an item of " + to_string(a_) + " -> " + to_string(c_) + ": " +
                      to_string(f));
  }
  return it->second;
}

Coloring coloring_from_rank(std::shared_ptr<const ItemSet> items, int k, std::uint64_t rank) {
  Coloring chi{items, std::vector<int>(items->size(), 1), k};
  for (int i = items->size() - 1; i >= 0; --i) {
    chi.colors[i] = static_cast<int>(rank % k) + 1;
    rank /= k;
  }
  return chi;
}

std::uint64_t coloring_rank(const Coloring& chi) {
  std::uint64_t r = 0;
  for (int c : chi.colors) r = r * chi.k + (c - 1);
  return r;
}

std::string arrow_notation(const ArrowQuery& q) {
  return to_string(q.c) + (q.variant == Variant::hom ? " -hom-> (" : " -> (") + to_string(q.b) +
         ")^" + to_string(q.a) + "_" + std::to_string(q.k);
}

void validate_query(const ArrowQuery& q) {
  if (!q.cat) throw DomainError("query has no category");
  if (q.k < 2) throw DomainError("color count k must be at least 2, got " + std::to_string(q.k));
  for (const auto* o : {&q.a, &q.b, &q.c}) {
    if (!q.cat->is_object(*o)) throw DomainError("not an object of " + q.cat->tag() + ": " + to_string(*o));
  }
  if (!q.cat->has_arrow(q.a, q.b)) throw DomainError("no morphism A -> B in " + arrow_notation(q));
  if (!q.cat->has_arrow(q.b, q.c)) throw DomainError("no morphism B -> C in " + arrow_notation(q));
}

std::vector<Morphism> pattern_morphisms(const FiniteCategory& cat, const ObjectId& a,
                                        const ObjectId& b, Variant variant) {
  if (variant == Variant::hom) return cat.hom(a, b);
  std::vector<Morphism> out;
  for (auto& cls : subobject_classes(cat, a, b)) out.push_back(std::move(cls.representative));
  return out;
}

namespace {

bool monochromatic_with(const ArrowQuery& q, const std::vector<Morphism>& pattern,
                        const Coloring& chi, const WitnessAnswer& ans) {
  if (!(ans.w.dom == q.b) || !(ans.w.cod == q.c) || !q.cat->contains(ans.w)) return false;
  for (const auto& f : pattern) {
    if (chi.color_of(q.cat->compose(ans.w, f)) != ans.color) return false;
  }
  return true;
}

void require_compatible(const ArrowQuery& q, const ItemSet& items, const Coloring& chi) {
  if (!chi.items || chi.items->size() != items.size() || !(chi.items->source() == items.source()) ||
      !(chi.items->target() == items.target()) || chi.items->variant() != items.variant()) {
    throw DomainError("coloring is over a different item set");
  }
  if (chi.k != q.k) {
    throw DomainError("coloring uses " + std::to_string(chi.k) + " colors, query has " +
                      std::to_string(q.k));
  }
  if (static_cast<int>(chi.colors.size()) != items.size()) {
    throw DomainError("coloring is not total");
  }
  for (int c : chi.colors) {
    if (c < 1 || c > q.k) throw DomainError("color " + std::to_string(c) + " out of range");
  }
}

}  // namespace

bool is_monochromatic(const ArrowQuery& q, const Coloring& chi, const WitnessAnswer& answer) {
  return monochromatic_with(q, pattern_morphisms(*q.cat, q.a, q.b, q.variant), chi, answer);
}

bool is_bad_coloring(const ArrowQuery& q, const Coloring& chi, std::string* reason) {
  auto fail = [&](std::string why) {
    if (reason) *reason = std::move(why);
    return false;
  };
  ItemSet items(q.cat, q.a, q.c, q.variant);
  if (!chi.items || chi.items->size() != items.size() ||
      static_cast<int>(chi.colors.size()) != items.size()) {
    return fail("coloring does not cover the " + std::to_string(items.size()) + " items");
  }
  for (int c : chi.colors) {
    if (c < 1 || c > q.k) return fail("color " + std::to_string(c) + " out of range 1.." + std::to_string(q.k));
  }
  auto pattern = pattern_morphisms(*q.cat, q.a, q.b, q.variant);
  for (const auto& w : q.cat->hom(q.b, q.c)) {
    std::set<int> seen;
    for (const auto& f : pattern) seen.insert(chi.colors.at(items.index_of(q.cat->compose(w, f))));
    if (seen.size() < 2) return fail("witness " + to_string(w) + " is monochromatic");
  }
  return true;
}

RamseyOracle::RamseyOracle(ArrowQuery query, std::shared_ptr<const ItemSet> items, Finder finder)
    : query_(std::move(query)), items_(std::move(items)), finder_(std::move(finder)) {
  pattern_ = std::make_shared<const std::vector<Morphism>>(
      pattern_morphisms(*query_.cat, query_.a, query_.b, query_.variant));
}

WitnessAnswer RamseyOracle::evaluate(const Coloring& chi) const {
  require_compatible(query_, *items_, chi);
  auto ans = finder_(chi);
  if (!monochromatic_with(query_, *pattern_, chi, ans)) {
    throw PostconditionViolation("oracle for " + arrow_notation(query_) + " returned " +
                                 to_string(ans.w) + " with color " + std::to_string(ans.color) +
                                 ", which is not monochromatic");
  }
  return ans;
}

WitnessAnswer RamseyOracle::evaluate(const std::vector<int>& colors) const {
  return evaluate(Coloring{items_, colors, query_.k});
}

std::shared_ptr<const ArrowInstance> build_instance(const ArrowQuery& q) {
  auto inst = std::make_shared<ArrowInstance>();
  inst->query = q;
  inst->items = std::make_shared<ItemSet>(q.cat, q.a, q.c, q.variant);
  inst->witnesses = q.cat->hom(q.b, q.c);
  auto pattern = pattern_morphisms(*q.cat, q.a, q.b, q.variant);
  inst->graph.vertices = inst->items->size();
  std::map<std::vector<int>, int> seen;
  for (std::size_t i = 0; i < inst->witnesses.size(); ++i) {
    std::vector<int> image;
    image.reserve(pattern.size());
    for (const auto& f : pattern) image.push_back(inst->items->index_of(q.cat->compose(inst->witnesses[i], f)));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (seen.emplace(image, static_cast<int>(inst->graph.edges.size())).second) {
      inst->graph.edges.push_back(image);
      inst->edge_witness.push_back(static_cast<int>(i));
    }
    inst->images.push_back(std::move(image));
  }
  return inst;
}

RamseyOracle first_witness_oracle(std::shared_ptr<const ArrowInstance> inst) {
  auto finder = [inst](const Coloring& chi) -> WitnessAnswer {
    for (std::size_t i = 0; i < inst->witnesses.size(); ++i) {
      const auto& image = inst->images[i];
      const int c = chi.colors[image.front()];
      if (std::all_of(image.begin(), image.end(), [&](int x) { return chi.colors[x] == c; })) {
        return {c, inst->witnesses[i]};
      }
    }
    throw PostconditionViolation("no monochromatic witness for " + arrow_notation(inst->query));
  };
  return RamseyOracle(inst->query, inst->items, finder);
}

RamseyOracle trivial_oracle(const ArrowQuery& q) {
  auto items = std::make_shared<ItemSet>(q.cat, q.a, q.c, q.variant);
  auto w = q.cat->hom(q.b, q.c);
  if (w.empty()) throw DomainError("no morphism B -> C in " + arrow_notation(q));
  if (q.k != 1) throw DomainError("trivial oracle requires k = 1");
  auto first = w.front();
  return RamseyOracle(q, items, [first](const Coloring&) { return WitnessAnswer{1, first}; });
}

std::vector<WitnessTableEntry> tabulate_witnesses(const RamseyOracle& oracle, int jobs) {
  const int n = oracle.items()->size();
  const int k = oracle.query().k;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= k;
    if (total > kMaxTabulatedColorings) {
      throw DomainError("witness table would exceed " + std::to_string(kMaxTabulatedColorings) +
                        " colorings");
    }
  }
  std::vector<WitnessTableEntry> table(total);
  std::exception_ptr error;
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(total); ++r) {
    try {
      auto chi = coloring_from_rank(oracle.items(), k, r);
      auto ans = oracle.evaluate(chi);
      table[r] = {static_cast<std::uint64_t>(r), ans.color, ans.w};
    } catch (...) {
#pragma omp critical(arrowlab_table_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return table;
}

ArrowVerdict check_arrow(const ArrowQuery& q, const ArrowOptions& opts) {
  validate_query(q);
  ArrowVerdict v;
  v.query = q;
  v.mode = opts.mode;
  v.budget = opts.budget;
  v.instance = build_instance(q);
  const auto& g = v.instance->graph;

  auto make_bad = [&](const std::vector<int>& zero_based) {
    Coloring chi{v.instance->items, zero_based, q.k};
    for (auto& c : chi.colors) ++c;
    return chi;
  };

  if (opts.seed) {
    std::vector<int> zero(*opts.seed);
    if (static_cast<int>(zero.size()) != g.vertices) throw DomainError("seed coloring is not total");
    for (auto& c : zero) {
      if (c < 1 || c > q.k) throw DomainError("seed color out of range");
      --c;
    }
    if (is_proper_coloring(g, zero)) {
      v.status = Verdict::fails;
      v.bad_coloring = make_bad(zero);
      return v;
    }
  }

  KernelResult r;
  if (opts.mode == SearchMode::exhaustive) {
    r = opts.jobs == 1 ? exhaustive_serial(g, q.k, opts.budget)
                       : exhaustive_parallel(g, q.k, opts.budget, opts.jobs);
  } else {
    r = backtrack_search(g, q.k, {opts.budget, opts.fault});
  }
  v.explored = r.explored;
  switch (r.status) {
    case KernelStatus::found:
      v.status = Verdict::fails;
      v.bad_coloring = make_bad(r.coloring);
      break;
    case KernelStatus::exhausted:
      v.status = Verdict::holds;
      v.finder = first_witness_oracle(v.instance);
      if (opts.tabulate) {
        std::uint64_t total = 1;
        bool small = true;
        for (int i = 0; i < g.vertices && small; ++i) small = (total *= q.k) <= kMaxTabulatedColorings;
        if (small) v.table = tabulate_witnesses(*v.finder, opts.jobs);
      }
      break;
    case KernelStatus::budget_exceeded:
      v.status = Verdict::inconclusive;
      break;
  }
  return v;
}

Coloring nonrigidity_coloring(CategoryPtr cat, const ObjectId& a, const ObjectId& c,
                              const Morphism& alpha) {
  if (!(alpha.dom == a) || !(alpha.cod == a) || !cat->contains(alpha)) {
    throw PreconditionError("alpha is not an endomorphism of " + to_string(a));
  }
  if (alpha == cat->identity(a)) throw PreconditionError("alpha must not be the identity");
  if (!inverse_of(*cat, alpha)) throw PreconditionError("alpha is not invertible");
  auto items = std::make_shared<ItemSet>(cat, a, c, Variant::hom);
  Coloring chi{items, std::vector<int>(items->size(), 0), 2};
  for (int i = 0; i < items->size(); ++i) {
    if (chi.colors[i] != 0) continue;
    chi.colors[i] = 1;
    int length = 1;
    for (auto h = cat->compose(items->items()[i], alpha); !(h == items->items()[i]);
         h = cat->compose(h, alpha)) {
      chi.colors[items->index_of(h)] = 2;
      ++length;
    }
    if (length == 1) {
      throw PreconditionError("orbit of " + to_string(items->items()[i]) +
                              " is a single point; morphisms are not monic");
    }
  }
  return chi;
}

ArrowVerdict weaken_witness(const ArrowVerdict& v, const Morphism& e) {
  if (v.status != Verdict::holds || !v.finder) {
    throw PreconditionError("weaken_witness needs a holding verdict with a witness finder");
  }
  const auto& q = v.query;
  if (!(e.cod == q.b) || !q.cat->contains(e)) {
    throw PreconditionError("e is not a morphism into B: " + to_string(e));
  }
  ArrowQuery weak = q;
  weak.b = e.dom;
  ArrowVerdict out;
  out.query = weak;
  out.status = Verdict::holds;
  out.mode = v.mode;
  out.budget = v.budget;
  out.explored = v.explored;
  RamseyOracle base = *v.finder;
  auto cat = q.cat;
  out.finder = RamseyOracle(weak, base.items(), [base, cat, e](const Coloring& chi) {
    auto ans = base.evaluate(chi);
    return WitnessAnswer{ans.color, cat->compose(ans.w, e)};
  });
  if (!v.table.empty()) out.table = tabulate_witnesses(*out.finder);
  return out;
}

RamseySearchResult search_ramsey_object(CategoryPtr cat, const ObjectId& b, const ObjectId& a,
                                        int k, Variant variant,
                                        const std::vector<ObjectId>& candidates,
                                        const ArrowOptions& opts) {
  if (candidates.empty()) throw DomainError("search_ramsey_object: empty object stream");
  if (!cat->has_arrow(a, b)) throw DomainError("no morphism A -> B");
  RamseySearchResult result;
  for (const auto& c : candidates) {
    result.last_grade = c.grade;
    if (!cat->has_arrow(b, c)) {
      result.log.push_back({c, Verdict::fails, true});
      continue;
    }
    auto verdict = check_arrow({cat, c, b, a, k, variant}, opts);
    result.log.push_back({c, verdict.status, false});
    if (verdict.holds()) {
      result.c = c;
      result.verdict = std::move(verdict);
      return result;
    }
  }
  return result;
}

OracleFactory search_factory(CategoryPtr cat, ObjectId b, ObjectId a, Variant variant,
                             std::vector<ObjectId> candidates, ArrowOptions opts) {
  return [=](int colors) -> std::optional<RamseyOracle> {
    auto found = search_ramsey_object(cat, b, a, colors, variant, candidates, opts);
    if (!found.verdict) return std::nullopt;
    return found.verdict->finder;
  };
}

ProductWitness product_arrow_witness(const RamseyOracle& o1, const OracleFactory& factory2,
                                     const ObjectId& a2, const ObjectId& b2, int k) {
  const auto& q1 = o1.query();
  if (q1.variant != Variant::subobject) {
    throw PreconditionError("product construction is stated for subobject arrows");
  }
  if (q1.k != k) throw PreconditionError("first oracle colors with a different k");
  ProductWitness out;
  out.t = o1.items()->size();

  std::uint64_t colors = 1;
  for (int i = 0; i < out.t; ++i) {
    colors *= k;
    if (colors > kMaxProductColors) return out;
  }

  std::optional<RamseyOracle> o2 = factory2(static_cast<int>(colors));
  if (!o2) return out;
  const auto& q2 = o2->query();
  if (!(q2.a == a2) || !(q2.b == b2) || q2.variant != Variant::subobject ||
      q2.k != static_cast<int>(colors)) {
    throw PreconditionError("second oracle answers a different query");
  }

  auto cat2 = q2.cat;
  out.product = product(q1.cat, cat2);
  out.c = pair_object(q1.c, o2->query().c);
  ArrowQuery q{out.product, out.c, pair_object(q1.b, b2), pair_object(q1.a, a2), k,
               Variant::subobject};
  auto items = std::make_shared<ItemSet>(q.cat, q.a, q.c, q.variant);

  const auto& rows = o1.items()->items();
  const auto& cols = o2->items()->items();
  std::vector<std::vector<int>> cell(rows.size(), std::vector<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      cell[i][j] = items->index_of(pair_morphism(rows[i], cols[j]));
    }
  }
  auto first_pattern = pattern_morphisms(*cat2, a2, b2, Variant::subobject).front();
  auto second = *o2;

  out.oracle = RamseyOracle(q, items, [=](const Coloring& chi) {
    std::vector<int> encoded(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      int code = 0;
      for (std::size_t i = 0; i < rows.size(); ++i) code = code * k + (chi.colors[cell[i][j]] - 1);
      encoded[j] = code + 1;
    }
    auto [c2, w2] = second.evaluate(encoded);
    (void)c2;
    auto e = cat2->compose(w2, first_pattern);
    std::vector<int> induced(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      induced[i] = chi.colors[items->index_of(pair_morphism(rows[i], e))];
    }
    auto [c1, w1] = o1.evaluate(induced);
    return WitnessAnswer{c1, pair_morphism(w1, w2)};
  });
  out.status = Verdict::holds;
  return out;
}

ModeComparison cross_check_modes(const ArrowQuery& q, const ArrowOptions& opts) {
  auto ex = opts;
  ex.mode = SearchMode::exhaustive;
  ex.tabulate = false;
  auto bt = opts;
  bt.mode = SearchMode::backtracking;
  bt.tabulate = false;
  return {check_arrow(q, ex).status, check_arrow(q, bt).status};
}

}  // namespace arrowlab

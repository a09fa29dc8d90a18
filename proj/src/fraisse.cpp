#include "arrowlab/fraisse.hpp"

#include <omp.h>

#include <exception>
#include <map>

#include "arrowlab/ordered_power.hpp"

namespace arrowlab {

std::string to_string(ClosureProperty p) {
  switch (p) {
    case ClosureProperty::hp: return "HP";
    case ClosureProperty::jep: return "JEP";
    case ClosureProperty::ap: return "AP";
    case ClosureProperty::order_expansion: return "ORDER-EXPANSION";
    case ClosureProperty::reasonable: return "REASONABLE";
    case ClosureProperty::ordering: return "ORDERING";
  }
  return "?";
}

std::string to_string(ClosureStatus s) {
  switch (s) {
    case ClosureStatus::pass: return "pass";
    case ClosureStatus::fail: return "fail";
    case ClosureStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

nlohmann::json to_json(const ObjectId& obj) {
  return {{"category", obj.category}, {"object", obj.payload}};
}

nlohmann::json to_json(const Morphism& m) {
  return {{"dom", m.dom.payload}, {"cod", m.cod.payload}, {"payload", m.payload}};
}

ClosureReport check_HP(const FiniteCategory& cat, int bound) {
  ClosureReport r;
  r.property = ClosureProperty::hp;
  r.bound = bound;
  for (const auto& x : cat.objects(bound)) {
    for (const auto& s : cat.substructures(x)) {
      ++r.checked;
      if (!cat.is_member(s)) {
        r.status = ClosureStatus::fail;
        r.counterexample = {{"object", x.payload}, {"substructure", s.payload}};
        r.detail = "substructure " + to_string(s.payload) + " of " + to_string(x) +
                   " is not in the class";
        return r;
      }
    }
  }
  r.detail = std::to_string(r.checked) + " substructures checked";
  return r;
}

namespace {

// Runs `fn(i)` for i in [0, n) in parallel; results are stored per index.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn&& fn) {
  std::vector<T> out(n);
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    try {
      out[i] = fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(arrowlab_fraisse_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::vector<ObjectId> first_candidates(const std::vector<ObjectId>& candidates,
                                       std::uint64_t budget) {
  const auto n = std::min<std::uint64_t>(budget, candidates.size());
  return {candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(n)};
}

}  // namespace

ClosureReport check_JEP(const FiniteCategory& cat, int bound, const std::vector<ObjectId>& candidates,
                        std::uint64_t budget) {
  ClosureReport r;
  r.property = ClosureProperty::jep;
  r.bound = bound;
  const auto objs = cat.objects(bound);
  const auto pool = first_candidates(candidates, budget);
  std::vector<std::pair<ObjectId, ObjectId>> pairs;
  for (const auto& a : objs) {
    for (const auto& b : objs) pairs.emplace_back(a, b);
  }
  auto found = parallel_map<std::optional<ObjectId>>(pairs.size(), [&](std::size_t i) {
    for (const auto& d : pool) {
      if (cat.has_arrow(pairs[i].first, d) && cat.has_arrow(pairs[i].second, d)) {
        return std::optional<ObjectId>(d);
      }
    }
    return std::optional<ObjectId>();
  });
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    ++r.checked;
    if (!found[i]) {
      r.status = ClosureStatus::inconclusive;
      r.counterexample = {{"a", pairs[i].first.payload}, {"b", pairs[i].second.payload}};
      r.detail = "no joint embedding among " + std::to_string(pool.size()) + " candidates for " +
                 to_string(pairs[i].first) + ", " + to_string(pairs[i].second);
      return r;
    }
    r.certificate.push_back({pairs[i].first.payload, pairs[i].second.payload, found[i]->payload});
  }
  r.detail = std::to_string(r.checked) + " pairs jointly embedded";
  return r;
}

ClosureReport check_AP(const FiniteCategory& cat, int bound, const std::vector<ObjectId>& candidates,
                       std::uint64_t budget) {
  ClosureReport r;
  r.property = ClosureProperty::ap;
  r.bound = bound;
  const auto objs = cat.objects(bound);
  const auto pool = first_candidates(candidates, budget);
  std::vector<std::pair<Morphism, Morphism>> spans;
  for (const auto& a : objs) {
    for (const auto& b : objs) {
      for (const auto& c : objs) {
        for (const auto& f : cat.hom(a, b)) {
          for (const auto& g : cat.hom(a, c)) spans.emplace_back(f, g);
        }
      }
    }
  }
  using Amalgam = std::optional<std::pair<Morphism, Morphism>>;
  auto found = parallel_map<Amalgam>(spans.size(), [&](std::size_t i) -> Amalgam {
    const auto& [f, g] = spans[i];
    for (const auto& d : pool) {
      std::map<Payload, Morphism> via_g;
      for (const auto& v : cat.hom(g.cod, d)) via_g.emplace(cat.compose(v, g).payload, v);
      if (via_g.empty()) continue;
      for (const auto& u : cat.hom(f.cod, d)) {
        auto it = via_g.find(cat.compose(u, f).payload);
        if (it != via_g.end()) return std::pair{u, it->second};
      }
    }
    return std::nullopt;
  });
  for (std::size_t i = 0; i < spans.size(); ++i) {
    ++r.checked;
    if (!found[i]) {
      r.status = ClosureStatus::inconclusive;
      r.counterexample = {{"f", to_json(spans[i].first)}, {"g", to_json(spans[i].second)}};
      r.detail = "no amalgam among " + std::to_string(pool.size()) + " candidates for the span " +
                 to_string(spans[i].first) + ", " + to_string(spans[i].second);
      return r;
    }
    r.certificate.push_back({{"f", to_json(spans[i].first)},
                             {"g", to_json(spans[i].second)},
                             {"u", to_json(found[i]->first)},
                             {"v", to_json(found[i]->second)}});
  }
  r.detail = std::to_string(r.checked) + " spans amalgamated";
  return r;
}

std::vector<ObjectId> expansions(const FunctorImpl& u, const ObjectId& x) {
  std::vector<ObjectId> out;
  for (const auto& e : u.source()->objects_at(x.grade)) {
    if (u(e) == x) out.push_back(e);
  }
  return out;
}

ClosureReport check_order_expansion(const FunctorImpl& u, int bound) {
  ClosureReport r;
  r.property = ClosureProperty::order_expansion;
  r.bound = bound;
  for (const auto& x : u.target()->objects(bound)) {
    ++r.checked;
    const auto exp = expansions(u, x);
    if (exp.empty()) {
      r.status = ClosureStatus::fail;
      r.counterexample = {{"object", x.payload}};
      r.detail = to_string(x) + " has no expansion";
      return r;
    }
    r.certificate.push_back({{"object", x.payload}, {"expansions", exp.size()}});
  }
  r.detail = std::to_string(r.checked) + " objects have expansions";
  return r;
}

namespace {

bool lifts(const FunctorImpl& u, const ObjectId& a_ord, const ObjectId& b_ord, const Morphism& f) {
  for (const auto& g : u.source()->hom(a_ord, b_ord)) {
    if (u(g) == f) return true;
  }
  return false;
}

}  // namespace

ClosureReport check_reasonable(const FunctorImpl& u, int bound, const ExtensionHint& hint) {
  ClosureReport r;
  r.property = ClosureProperty::reasonable;
  r.bound = bound;
  const auto& base = *u.target();
  const auto& ordered = *u.source();
  std::size_t hinted = 0;
  const auto objs = base.objects(bound);
  for (const auto& a : objs) {
    const auto a_exp = expansions(u, a);
    for (const auto& b : objs) {
      const auto homs = base.hom(a, b);
      if (homs.empty()) continue;
      const auto b_exp = expansions(u, b);
      for (const auto& f : homs) {
        for (const auto& a_ord : a_exp) {
          ++r.checked;
          std::optional<ObjectId> chosen;
          if (hint) {
            auto h = hint(f, a_ord);
            if (h && ordered.is_object(*h) && u(*h) == b && lifts(u, a_ord, *h, f)) {
              chosen = ordered.object(h->payload);
              ++hinted;
            }
          }
          for (std::size_t i = 0; !chosen && i < b_exp.size(); ++i) {
            if (lifts(u, a_ord, b_exp[i], f)) chosen = b_exp[i];
          }
          if (!chosen) {
            r.status = ClosureStatus::fail;
            r.counterexample = {{"f", to_json(f)}, {"expansion", a_ord.payload}};
            r.detail = "no expansion of " + to_string(b) + " makes " + to_string(f) +
                       " order preserving from " + to_string(a_ord);
            return r;
          }
          r.certificate.push_back({{"f", to_json(f)}, {"from", a_ord.payload}, {"to", chosen->payload}});
        }
      }
    }
  }
  r.detail = std::to_string(r.checked) + " (embedding, expansion) pairs extended";
  if (hint) r.detail += ", " + std::to_string(hinted) + " by the hint";
  return r;
}

ExtensionHint ordered_power_hint(CategoryPtr ordered) {
  return [ordered](const Morphism& f, const ObjectId& a_ord) -> std::optional<ObjectId> {
    const int n = a_ord.payload.at(0);
    std::vector<int> pi(a_ord.payload.begin() + 1, a_ord.payload.end());
    auto sigma = reasonable_extension(f.payload, n, pi);
    Payload p{static_cast<int>(sigma.size())};
    p.insert(p.end(), sigma.begin(), sigma.end());
    ObjectId candidate{ordered->tag(), p, static_cast<int>(sigma.size())};
    if (!ordered->is_object(candidate)) return std::nullopt;
    return candidate;
  };
}

OrderingCheck check_ordering_witness(const FunctorImpl& u, const ObjectId& a, const ObjectId& b) {
  OrderingCheck out;
  for (const auto& a_ord : expansions(u, a)) {
    for (const auto& b_ord : expansions(u, b)) {
      if (!u.source()->has_arrow(a_ord, b_ord)) {
        out.refuting = {a_ord, b_ord};
        return out;
      }
    }
  }
  out.witness = true;
  return out;
}

OrderingSearch find_ordering_witness(const FunctorImpl& u, const ObjectId& a,
                                     const std::vector<ObjectId>& candidates, std::uint64_t budget) {
  OrderingSearch out;
  for (const auto& b : candidates) {
    if (out.tried >= budget) break;
    ++out.tried;
    out.last_grade = b.grade;
    if (!u.target()->has_arrow(a, b)) continue;
    if (check_ordering_witness(u, a, b).witness) {
      out.witness = b;
      return out;
    }
  }
  return out;
}

}  // namespace arrowlab

#include "arrowlab/functor.hpp"

#include <map>
#include <set>
#include <tuple>

namespace arrowlab {

FunctorImpl::FunctorImpl(std::string name, CategoryPtr source, CategoryPtr target,
                         ObjectMap on_objects, MorphismMap on_morphisms,
                         std::optional<int> domain_bound)
    : name_(std::move(name)),
      source_(std::move(source)),
      target_(std::move(target)),
      on_objects_(std::move(on_objects)),
      on_morphisms_(std::move(on_morphisms)),
      bound_(domain_bound) {}

void FunctorImpl::check_domain(const ObjectId& a) const {
  if (bound_ && source_->grade_of(a.payload) > *bound_) {
    throw DomainError(name_ + " is only defined up to grade " + std::to_string(*bound_) +
                      ", got " + to_string(a));
  }
}

ObjectId FunctorImpl::operator()(const ObjectId& a) const {
  check_domain(a);
  return on_objects_(a);
}

Morphism FunctorImpl::operator()(const Morphism& f) const {
  check_domain(f.dom);
  check_domain(f.cod);
  return on_morphisms_(f);
}

FunctorImpl identity_functor(CategoryPtr cat) {
  return FunctorImpl(
      "id(" + cat->tag() + ")", cat, cat, [](const ObjectId& a) { return a; },
      [](const Morphism& f) { return f; });
}

FunctorImpl compose(const FunctorImpl& g, const FunctorImpl& f) {
  return FunctorImpl(
      g.name() + "." + f.name(), f.source(), g.target(),
      [f, g](const ObjectId& a) { return g(f(a)); }, [f, g](const Morphism& m) { return g(f(m)); },
      f.domain_bound());
}

FunctorImpl with_morphism_override(const FunctorImpl& f, Morphism at, Morphism value) {
  return FunctorImpl(
      f.name() + "*", f.source(), f.target(), [f](const ObjectId& a) { return f(a); },
      [f, at, value](const Morphism& m) { return m == at ? value : f(m); }, f.domain_bound());
}

nlohmann::json functor_to_tables(const FunctorImpl& f, int bound) {
  nlohmann::json objects = nlohmann::json::array();
  nlohmann::json morphisms = nlohmann::json::array();
  auto objs = f.source()->objects(bound);
  for (const auto& a : objs) objects.push_back({a.payload, f(a).payload});
  for (const auto& a : objs) {
    for (const auto& b : objs) {
      for (const auto& m : f.source()->hom(a, b)) {
        morphisms.push_back(
            {{"dom", a.payload}, {"cod", b.payload}, {"payload", m.payload}, {"image", f(m).payload}});
      }
    }
  }
  return {{"name", f.name()}, {"bound", bound}, {"objects", objects}, {"morphisms", morphisms}};
}

FunctorImpl functor_from_tables(const nlohmann::json& tables, CategoryPtr source,
                                CategoryPtr target) {
  using Key = std::tuple<Payload, Payload, Payload>;
  auto objects = std::make_shared<std::map<Payload, Payload>>();
  auto morphisms = std::make_shared<std::map<Key, Payload>>();
  for (const auto& row : tables.at("objects")) {
    objects->emplace(row.at(0).get<Payload>(), row.at(1).get<Payload>());
  }
  for (const auto& row : tables.at("morphisms")) {
    morphisms->emplace(Key{row.at("dom").get<Payload>(), row.at("cod").get<Payload>(),
                           row.at("payload").get<Payload>()},
                       row.at("image").get<Payload>());
  }
  auto object_map = [objects, target](const ObjectId& a) {
    auto it = objects->find(a.payload);
    if (it == objects->end()) throw DomainError("functor table has no entry for " + to_string(a));
    return target->object(it->second);
  };
  auto morphism_map = [morphisms, object_map](const Morphism& m) {
    auto it = morphisms->find(Key{m.dom.payload, m.cod.payload, m.payload});
    if (it == morphisms->end()) throw DomainError("functor table has no entry for " + to_string(m));
    return Morphism{object_map(m.dom), object_map(m.cod), it->second};
  };
  return FunctorImpl(tables.value("name", std::string("table")), std::move(source),
                     std::move(target), object_map, morphism_map, tables.at("bound").get<int>());
}

NaturalTransformationImpl::NaturalTransformationImpl(std::string name, FunctorImpl from,
                                                     FunctorImpl to, Components components)
    : name_(std::move(name)),
      from_(std::move(from)),
      to_(std::move(to)),
      components_(std::move(components)) {}

NaturalTransformationImpl identity_transformation(std::string name, FunctorImpl from,
                                                  FunctorImpl to) {
  auto target = from.target();
  auto f = from;
  return NaturalTransformationImpl(std::move(name), std::move(from), std::move(to),
                                   [f, target](const ObjectId& a) { return target->identity(f(a)); });
}

NaturalTransformationImpl with_component_override(const NaturalTransformationImpl& t,
                                                  ObjectId at, Morphism value) {
  return NaturalTransformationImpl(t.name() + "*", t.from(), t.to(),
                                   [t, at, value](const ObjectId& a) {
                                     return a == at ? value : t.at(a);
                                   });
}

AdjunctionImpl::AdjunctionImpl(std::string name, FunctorImpl left, FunctorImpl right,
                               NaturalTransformationImpl unit, NaturalTransformationImpl counit)
    : name_(std::move(name)),
      left_(std::move(left)),
      right_(std::move(right)),
      unit_(std::move(unit)),
      counit_(std::move(counit)) {}

Morphism AdjunctionImpl::phi(const ObjectId& c, const Morphism& f) const {
  return left_.source()->compose(right_(f), unit_.at(c));
}

Morphism AdjunctionImpl::phi_inverse(const Morphism& g, const ObjectId& d) const {
  return right_.source()->compose(counit_.at(d), left_(g));
}

AdjunctionImpl identity_adjunction(CategoryPtr cat) {
  auto id = identity_functor(cat);
  auto idid = compose(id, id);
  return AdjunctionImpl("id(" + cat->tag() + ")", id, id,
                        identity_transformation("eta", id, idid),
                        identity_transformation("eps", idid, id));
}

EquivalenceImpl::EquivalenceImpl(std::string name, FunctorImpl e, FunctorImpl h,
                                 NaturalTransformationImpl eta, NaturalTransformationImpl eps)
    : name_(std::move(name)),
      e_(std::move(e)),
      h_(std::move(h)),
      eta_(std::move(eta)),
      eps_(std::move(eps)) {}

EquivalenceImpl EquivalenceImpl::swapped() const {
  return EquivalenceImpl(name_ + "^-1", h_, e_, eps_, eta_);
}

AdjunctionImpl EquivalenceImpl::as_adjunction() const {
  auto eps = eps_;
  auto d = e_.target();
  NaturalTransformationImpl counit("inv(" + eps_.name() + ")", eps_.to(), eps_.from(),
                                   [eps, d](const ObjectId& x) {
                                     auto inv = inverse_of(*d, eps.at(x));
                                     if (!inv) {
                                       throw PreconditionError("counit component at " +
                                                               to_string(x) + " is not invertible");
                                     }
                                     return *inv;
                                   });
  return AdjunctionImpl(name_, e_, h_, eta_, counit);
}

EquivalenceImpl identity_equivalence(CategoryPtr cat) {
  auto id = identity_functor(cat);
  auto idid = compose(id, id);
  return EquivalenceImpl("id(" + cat->tag() + ")", id, id,
                         identity_transformation("eta", id, idid),
                         identity_transformation("eps", id, idid));
}

EquivalenceImpl payload_identity_equivalence(std::string name, CategoryPtr c, CategoryPtr d) {
  auto relabel = [](CategoryPtr to) {
    return std::pair{[to](const ObjectId& a) { return to->object(a.payload); },
                     [to](const Morphism& f) {
                       return Morphism{to->object(f.dom.payload), to->object(f.cod.payload),
                                       f.payload};
                     }};
  };
  auto [eo, em] = relabel(d);
  auto [ho, hm] = relabel(c);
  FunctorImpl e(name, c, d, eo, em);
  FunctorImpl h(name + "^-1", d, c, ho, hm);
  return EquivalenceImpl(name, e, h,
                         identity_transformation("eta", identity_functor(c), compose(h, e)),
                         identity_transformation("eps", identity_functor(d), compose(e, h)));
}

namespace {

template <class Fn>
void guarded(LawReport& report, const std::string& law, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& ex) {
    report.add(law, ex.what());
  }
}

struct Homs {
  std::vector<ObjectId> objs;
  std::vector<std::vector<std::vector<Morphism>>> at;

  Homs(const FiniteCategory& cat, int bound) : objs(cat.objects(bound)) {
    at.assign(objs.size(), std::vector<std::vector<Morphism>>(objs.size()));
    for (std::size_t i = 0; i < objs.size(); ++i) {
      for (std::size_t j = 0; j < objs.size(); ++j) at[i][j] = cat.hom(objs[i], objs[j]);
    }
  }
};

}  // namespace

LawReport verify_functor(const FunctorImpl& f, int bound) {
  LawReport report;
  report.subject = f.name();
  report.bound = bound;
  const auto& src = *f.source();
  const auto& dst = *f.target();
  Homs h(src, bound);
  const std::size_t n = h.objs.size();
  for (const auto& a : h.objs) {
    ++report.checks;
    guarded(report, "objects", [&] {
      auto fa = f(a);
      if (!dst.is_object(fa)) report.add("objects", to_string(a) + " |-> non-object " + to_string(fa));
      if (!(f(src.identity(a)) == dst.identity(fa))) {
        report.add("identity", "F(id " + to_string(a) + ") != id " + to_string(fa));
      }
    });
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& m : h.at[i][j]) {
        ++report.checks;
        guarded(report, "dom/cod", [&] {
          auto fm = f(m);
          if (!(fm.dom == f(h.objs[i])) || !(fm.cod == f(h.objs[j])) || !dst.contains(fm)) {
            report.add("dom/cod", to_string(m) + " |-> " + to_string(fm));
          }
        });
        for (std::size_t l = 0; l < n; ++l) {
          for (const auto& g : h.at[j][l]) {
            ++report.checks;
            guarded(report, "composition", [&] {
              if (!(f(src.compose(g, m)) == dst.compose(f(g), f(m)))) {
                report.add("composition", "F(" + to_string(g) + " . " + to_string(m) + ")");
              }
            });
          }
        }
      }
    }
  }
  return report;
}

LawReport verify_natural_transformation(const NaturalTransformationImpl& t, int bound) {
  LawReport report;
  report.subject = t.name();
  report.bound = bound;
  const auto& F = t.from();
  const auto& G = t.to();
  const auto& src = *F.source();
  const auto& dst = *F.target();
  Homs h(src, bound);
  for (const auto& a : h.objs) {
    ++report.checks;
    guarded(report, "component", [&] {
      auto c = t.at(a);
      if (!(c.dom == F(a)) || !(c.cod == G(a)) || !dst.contains(c)) {
        report.add("component", "at " + to_string(a) + ": " + to_string(c));
      }
    });
  }
  for (std::size_t i = 0; i < h.objs.size(); ++i) {
    for (std::size_t j = 0; j < h.objs.size(); ++j) {
      for (const auto& m : h.at[i][j]) {
        ++report.checks;
        guarded(report, "naturality", [&] {
          if (!(dst.compose(G(m), t.at(h.objs[i])) == dst.compose(t.at(h.objs[j]), F(m)))) {
            report.add("naturality", t.name() + " at " + to_string(m));
          }
        });
      }
    }
  }
  return report;
}

LawReport verify_adjunction(const AdjunctionImpl& adj, int bound) {
  LawReport report;
  report.subject = adj.name();
  report.bound = bound;
  const auto& F = adj.left();
  const auto& G = adj.right();
  const auto& C = *F.source();
  const auto& D = *F.target();
  report.merge(verify_functor(F, bound));
  report.merge(verify_functor(G, bound));
  report.merge(verify_natural_transformation(adj.unit(), bound));
  report.merge(verify_natural_transformation(adj.counit(), bound));

  auto cs = C.objects(bound);
  auto ds = D.objects(bound);
  for (const auto& c : cs) {
    ++report.checks;
    guarded(report, "triangle", [&] {
      if (!(D.compose(adj.counit().at(F(c)), F(adj.unit().at(c))) == D.identity(F(c)))) {
        report.add("triangle", "eps_F . F(eta) != id at " + to_string(c));
      }
    });
  }
  for (const auto& d : ds) {
    ++report.checks;
    guarded(report, "triangle", [&] {
      if (!(C.compose(G(adj.counit().at(d)), adj.unit().at(G(d))) == C.identity(G(d)))) {
        report.add("triangle", "G(eps) . eta_G != id at " + to_string(d));
      }
    });
  }
  for (const auto& c : cs) {
    for (const auto& d : ds) {
      guarded(report, "phi", [&] {
        auto left = D.hom(F(c), d);
        auto right = C.hom(c, G(d));
        std::set<Payload> images;
        for (const auto& f : left) {
          ++report.checks;
          auto g = adj.phi(c, f);
          if (!(g.dom == c) || !(g.cod == G(d)) || !C.contains(g)) {
            report.add("phi", "Phi(" + to_string(f) + ") = " + to_string(g) + " is not in hom");
            continue;
          }
          images.insert(g.payload);
          if (!(adj.phi_inverse(g, d) == f)) {
            report.add("phi", "Phi^-1(Phi(f)) != f for " + to_string(f));
          }
        }
        for (const auto& g : right) {
          ++report.checks;
          auto f = adj.phi_inverse(g, d);
          if (!(f.dom == F(c)) || !(f.cod == d) || !D.contains(f)) {
            report.add("phi", "Phi^-1(" + to_string(g) + ") = " + to_string(f) + " is not in hom");
            continue;
          }
          if (!(adj.phi(c, f) == g)) report.add("phi", "Phi(Phi^-1(g)) != g for " + to_string(g));
        }
        if (images.size() != right.size() || left.size() != right.size()) {
          report.add("phi", "|hom(F" + to_string(c) + ", " + to_string(d) + ")| = " +
                                std::to_string(left.size()) + " but |hom(" + to_string(c) +
                                ", G" + to_string(d) + ")| = " + std::to_string(right.size()));
        }
        // naturality in c: Phi(f . F(h)) = Phi(f) . h for h : c' -> c
        for (const auto& c2 : cs) {
          for (const auto& h : C.hom(c2, c)) {
            for (const auto& f : left) {
              ++report.checks;
              if (!(adj.phi(c2, D.compose(f, F(h))) == C.compose(adj.phi(c, f), h))) {
                report.add("phi naturality", "in C at " + to_string(h) + ", " + to_string(f));
              }
            }
          }
        }
        // naturality in d: Phi(k . f) = G(k) . Phi(f) for k : d -> d'
        for (const auto& d2 : ds) {
          for (const auto& k : D.hom(d, d2)) {
            for (const auto& f : left) {
              ++report.checks;
              if (!(adj.phi(c, D.compose(k, f)) == C.compose(G(k), adj.phi(c, f)))) {
                report.add("phi naturality", "in D at " + to_string(k) + ", " + to_string(f));
              }
            }
          }
        }
      });
    }
  }
  return report;
}

LawReport verify_equivalence(const EquivalenceImpl& eq, int bound) {
  LawReport report;
  report.subject = eq.name();
  report.bound = bound;
  const auto& E = eq.e();
  const auto& H = eq.h();
  const auto& C = *E.source();
  const auto& D = *E.target();
  report.merge(verify_functor(E, bound));
  report.merge(verify_functor(H, bound));
  report.merge(verify_natural_transformation(eq.eta(), bound));
  report.merge(verify_natural_transformation(eq.eps(), bound));
  auto cs = C.objects(bound);
  for (const auto& c : cs) {
    ++report.checks;
    guarded(report, "invertible", [&] {
      if (!inverse_of(C, eq.eta().at(c))) report.add("invertible", "eta at " + to_string(c));
    });
  }
  for (const auto& d : D.objects(bound)) {
    ++report.checks;
    guarded(report, "invertible", [&] {
      if (!inverse_of(D, eq.eps().at(d))) report.add("invertible", "eps at " + to_string(d));
    });
  }
  for (const auto& a : cs) {
    for (const auto& b : cs) {
      ++report.checks;
      guarded(report, "full and faithful", [&] {
        auto src = C.hom(a, b);
        auto dst = D.hom(E(a), E(b));
        std::set<Payload> images;
        for (const auto& f : src) images.insert(E(f).payload);
        if (images.size() != src.size()) {
          report.add("faithful", "E is not injective on hom(" + to_string(a) + ", " + to_string(b) + ")");
        }
        if (images.size() != dst.size()) {
          report.add("full", "E misses morphisms " + to_string(E(a)) + " -> " + to_string(E(b)));
        }
      });
    }
  }
  return report;
}

}  // namespace arrowlab

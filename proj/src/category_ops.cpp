#include "arrowlab/category_ops.hpp"

#include <algorithm>
#include <set>

namespace arrowlab {

std::vector<Morphism> automorphisms(const FiniteCategory& cat, const ObjectId& a) {
  auto ends = cat.hom(a, a);
  auto id = cat.identity(a);
  std::vector<Morphism> out;
  for (const auto& f : ends) {
    for (const auto& g : ends) {
      if (cat.compose(g, f) == id && cat.compose(f, g) == id) {
        out.push_back(f);
        break;
      }
    }
  }
  return out;
}

bool is_rigid(const FiniteCategory& cat, const ObjectId& a) {
  auto aut = automorphisms(cat, a);
  return aut.size() == 1 && aut.front() == cat.identity(a);
}

std::optional<Morphism> inverse_of(const FiniteCategory& cat, const Morphism& m) {
  for (const auto& g : cat.hom(m.cod, m.dom)) {
    if (cat.compose(g, m) == cat.identity(m.dom) && cat.compose(m, g) == cat.identity(m.cod)) {
      return g;
    }
  }
  return std::nullopt;
}

Morphism canonical_representative(const FiniteCategory& cat, const Morphism& f,
                                  const std::vector<Morphism>& aut) {
  Morphism best = f;
  for (const auto& alpha : aut) {
    auto g = cat.compose(f, alpha);
    if (g.payload < best.payload) best = g;
  }
  return best;
}

std::vector<SubobjectClass> subobject_classes(const FiniteCategory& cat, const ObjectId& a,
                                              const ObjectId& b) {
  auto aut = automorphisms(cat, a);
  std::set<Payload> seen;
  std::vector<SubobjectClass> out;
  for (const auto& f : cat.hom(a, b)) {
    auto rep = canonical_representative(cat, f, aut);
    if (seen.insert(rep.payload).second) out.push_back({rep, a, b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

SubobjectClass act_on_class(const FiniteCategory& cat, const Morphism& w,
                            const SubobjectClass& cls) {
  if (!(w.dom == cls.target)) {
    throw DomainError("act_on_class: dom(w) " + to_string(w.dom) + " != class target " +
                      to_string(cls.target));
  }
  auto aut = automorphisms(cat, cls.source);
  auto rep = canonical_representative(cat, cat.compose(w, cls.representative), aut);
  return {rep, cls.source, w.cod};
}

void LawReport::merge(const LawReport& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  checks += other.checks;
}

LawReport verify_category_laws(const FiniteCategory& cat, int bound) {
  LawReport report;
  report.subject = cat.tag();
  report.bound = bound;
  auto objs = cat.objects(bound);
  const std::size_t n = objs.size();
  std::vector<std::vector<std::vector<Morphism>>> homs(n, std::vector<std::vector<Morphism>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      homs[i][j] = cat.hom(objs[i], objs[j]);
      std::set<Payload> distinct;
      for (const auto& f : homs[i][j]) {
        ++report.checks;
        if (!distinct.insert(f.payload).second) {
          report.add("duplicate-free", "repeated morphism " + to_string(f));
        }
        if (!(f.dom == objs[i]) || !(f.cod == objs[j])) {
          report.add("dom/cod", "hom(" + to_string(objs[i]) + ", " + to_string(objs[j]) +
                                    ") lists " + to_string(f));
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto id = cat.identity(objs[i]);
    ++report.checks;
    if (!cat.contains(id)) report.add("identity", "identity not in hom: " + to_string(id));
  }
  // f : i -> j, g : j -> l, h : l -> m
  for (std::size_t i = 0; i < n; ++i) {
    auto id_i = cat.identity(objs[i]);
    for (std::size_t j = 0; j < n; ++j) {
      auto id_j = cat.identity(objs[j]);
      for (const auto& f : homs[i][j]) {
        report.checks += 2;
        if (!(cat.compose(id_j, f) == f)) report.add("left identity", to_string(f));
        if (!(cat.compose(f, id_i) == f)) report.add("right identity", to_string(f));
        for (std::size_t l = 0; l < n; ++l) {
          for (const auto& g : homs[j][l]) {
            auto gf = cat.compose(g, f);
            ++report.checks;
            if (!(gf.dom == objs[i] && gf.cod == objs[l]) ||
                !std::binary_search(homs[i][l].begin(), homs[i][l].end(), gf,
                                    [](const Morphism& x, const Morphism& y) {
                                      return x.payload < y.payload;
                                    })) {
              report.add("closure", to_string(g) + " . " + to_string(f) + " = " + to_string(gf));
              continue;
            }
            for (std::size_t m = 0; m < n; ++m) {
              for (const auto& h : homs[l][m]) {
                ++report.checks;
                if (!(cat.compose(h, gf) == cat.compose(cat.compose(h, g), f))) {
                  report.add("associativity",
                             to_string(h) + " ; " + to_string(g) + " ; " + to_string(f));
                }
              }
            }
          }
        }
      }
    }
  }
  return report;
}

std::optional<ObjectId> find_non_cofinal(const FiniteCategory& cat,
                                         const std::vector<ObjectId>& sub_objects, int bound) {
  for (const auto& x : cat.objects(bound)) {
    bool reaches = std::any_of(sub_objects.begin(), sub_objects.end(),
                               [&](const ObjectId& d) { return cat.has_arrow(x, d); });
    if (!reaches) return x;
  }
  return std::nullopt;
}

}  // namespace arrowlab

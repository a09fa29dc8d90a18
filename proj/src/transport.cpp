#include "arrowlab/transport.hpp"

#include <algorithm>
#include <set>

#include "arrowlab/category_ops.hpp"
#include "arrowlab/errors.hpp"
#include "arrowlab/fraisse.hpp"

namespace arrowlab {

namespace {

void require_images(const FunctorImpl& f, const ObjectId& a, const ObjectId& b,
                    const ArrowQuery& dq) {
  if (f(a) != dq.a || f(b) != dq.b) {
    throw PreconditionError("oracle answers " + arrow_notation(dq) + " but " + f.name() +
                            " sends (" + to_string(b) + ", " + to_string(a) + ") to (" +
                            to_string(f(b)) + ", " + to_string(f(a)) + ")");
  }
}

// RamseyOracle that recolors each target-side item through `d_to_c` and asks
// `d_oracle`; `lift` maps the returned witness back.
RamseyOracle pulled_back(ArrowQuery q, std::shared_ptr<const ItemSet> items,
                         const RamseyOracle& d_oracle, std::vector<int> d_to_c,
                         std::function<Morphism(const Morphism&)> lift) {
  return RamseyOracle(std::move(q), std::move(items),
                      [d_oracle, d_to_c = std::move(d_to_c), lift](const Coloring& chi) {
                        std::vector<int> colors(d_to_c.size());
                        for (std::size_t i = 0; i < d_to_c.size(); ++i) {
                          colors[i] = chi.colors[d_to_c[i]];
                        }
                        const auto ans = d_oracle.evaluate(colors);
                        return WitnessAnswer{ans.color, lift(ans.w)};
                      });
}

RamseyOracle adjunction_transport(const AdjunctionImpl& adj, const RamseyOracle& d_oracle,
                                  const ObjectId& a, const ObjectId& b, Variant variant) {
  const auto& dq = d_oracle.query();
  if (dq.variant != variant) {
    throw PreconditionError("expected a " + to_string(variant) + " oracle, got " +
                            arrow_notation(dq));
  }
  const auto& f = adj.left();
  const auto& g = adj.right();
  require_images(f, a, b, dq);
  ArrowQuery q{f.source(), g(dq.c), b, a, dq.k, variant};
  validate_query(q);
  auto items = std::make_shared<const ItemSet>(q.cat, a, q.c, variant);
  const auto& d_items = *d_oracle.items();
  std::vector<int> d_to_c(d_items.size());
  for (int i = 0; i < d_items.size(); ++i) {
    d_to_c[i] = items->index_of(adj.phi(a, d_items.items()[i]));
  }
  const Morphism eta_b = adj.unit().at(b);
  return pulled_back(q, items, d_oracle, std::move(d_to_c),
                     [g, eta_b, cat = q.cat](const Morphism& w) {
                       return cat->compose(g(w), eta_b);
                     });
}

std::set<Payload> payloads(const std::vector<Morphism>& ms) {
  std::set<Payload> out;
  for (const auto& m : ms) out.insert(m.payload);
  return out;
}

}  // namespace

RamseyOracle adjunction_transport_hom(const AdjunctionImpl& adj, const RamseyOracle& d_oracle,
                                      const ObjectId& a, const ObjectId& b) {
  return adjunction_transport(adj, d_oracle, a, b, Variant::hom);
}

bool check_aut_condition(const FunctorImpl& f, const ObjectId& a) {
  std::vector<Morphism> image;
  for (const auto& alpha : automorphisms(*f.source(), a)) image.push_back(f(alpha));
  return payloads(image) == payloads(automorphisms(*f.target(), f(a)));
}

ClassCompatibility class_phi_compat(const AdjunctionImpl& adj, const ObjectId& a,
                                    const ObjectId& b) {
  const auto& f = adj.left();
  const auto& g = adj.right();
  const auto& c_cat = *f.source();
  const auto& d_cat = *f.target();
  const ObjectId fa = f(a);
  ClassCompatibility out;
  out.left_classes = subobject_classes(d_cat, fa, b).size();
  out.right_classes = subobject_classes(c_cat, a, g(b)).size();
  if (!check_aut_condition(f, a)) {
    out.refused = true;
    out.reason = "Aut(" + to_string(fa) + ") differs from " + f.name() + "(Aut(" + to_string(a) +
                 ")); class counts " + std::to_string(out.left_classes) + " vs " +
                 std::to_string(out.right_classes);
    return out;
  }
  const auto aut_a = automorphisms(c_cat, a);
  const auto aut_fa = automorphisms(d_cat, fa);
  for (const auto& m : d_cat.hom(fa, b)) {
    std::vector<Morphism> lhs, rhs;
    for (const auto& beta : aut_fa) lhs.push_back(adj.phi(a, d_cat.compose(m, beta)));
    const Morphism pm = adj.phi(a, m);
    for (const auto& alpha : aut_a) rhs.push_back(c_cat.compose(pm, alpha));
    if (payloads(lhs) != payloads(rhs)) {
      out.reason = "Phi does not map the class of " + to_string(m) + " onto the class of " +
                   to_string(pm);
      return out;
    }
  }
  out.compatible = true;
  out.reason = "Phi maps classes to classes (" + std::to_string(out.left_classes) + " vs " +
               std::to_string(out.right_classes) + ")";
  return out;
}

RamseyOracle adjunction_transport_obj(const AdjunctionImpl& adj, const RamseyOracle& d_oracle,
                                      const ObjectId& a, const ObjectId& b) {
  const auto compat = class_phi_compat(adj, a, d_oracle.query().c);
  if (!compat.compatible) throw PreconditionError("class transport refused: " + compat.reason);
  return adjunction_transport(adj, d_oracle, a, b, Variant::subobject);
}

RamseyOracle equivalence_transport_obj(const EquivalenceImpl& eq, const RamseyOracle& d_oracle,
                                       const ObjectId& a, const ObjectId& b) {
  const auto& dq = d_oracle.query();
  if (dq.variant != Variant::subobject) {
    throw PreconditionError("expected a subobject oracle, got " + arrow_notation(dq));
  }
  const auto& e = eq.e();
  const auto& h = eq.h();
  require_images(e, a, b, dq);
  const auto& c_cat = e.source();
  const auto& d_cat = e.target();
  ArrowQuery q{c_cat, h(dq.c), b, a, dq.k, Variant::subobject};
  validate_query(q);
  auto items = std::make_shared<const ItemSet>(c_cat, a, q.c, Variant::subobject);

  const auto eps_inv = inverse_of(*d_cat, eq.eps().at(dq.c));
  if (!eps_inv) throw PreconditionError("counit component at " + to_string(dq.c) + " is not invertible");
  const Morphism eta_a = eq.eta().at(a);
  const auto& d_items = *d_oracle.items();
  std::vector<int> d_to_c(d_items.size(), -1);
  for (const auto& m : c_cat->hom(a, q.c)) {
    const Morphism lifted = d_cat->compose(*eps_inv, e(m));
    if (c_cat->compose(h(lifted), eta_a) != m) {
      throw PreconditionError("H(eps^-1) . HE(m) . eta differs from m at " + to_string(m));
    }
    d_to_c[d_items.index_of(lifted)] = items->index_of(m);
  }
  if (std::ranges::find(d_to_c, -1) != d_to_c.end()) {
    throw PreconditionError(e.name() + " is not full on hom(" + to_string(a) + ", " +
                            to_string(q.c) + ")");
  }
  const Morphism eta_b = eq.eta().at(b);
  return pulled_back(q, items, d_oracle, std::move(d_to_c),
                     [h, eta_b, c_cat](const Morphism& w) { return c_cat->compose(h(w), eta_b); });
}

namespace {

void check_square(const FunctorImpl& top, const FunctorImpl& right, const FunctorImpl& left,
                  const FunctorImpl& bottom, int bound, const std::string& label) {
  for (const auto& x : top.source()->objects(bound)) {
    if (right(top(x)) != bottom(left(x))) {
      throw PreconditionError("square " + label + " fails at " + to_string(x));
    }
    for (const auto& y : top.source()->objects(bound)) {
      for (const auto& m : top.source()->hom(x, y)) {
        if (right(top(m)) != bottom(left(m))) {
          throw PreconditionError("square " + label + " fails at " + to_string(m));
        }
      }
    }
  }
}

}  // namespace

ObjectId ordering_transport(const EquivalenceImpl& eq_star, const EquivalenceImpl& eq,
                            const FunctorImpl& u, const FunctorImpl& v, const ObjectId& a,
                            const ObjectId& witness_b, int bound) {
  check_square(eq_star.e(), v, u, eq.e(), bound, "V.E* = E.U");
  check_square(eq_star.h(), u, v, eq.h(), bound, "U.H* = H.V");
  const ObjectId ha = eq.h()(a);
  if (!check_ordering_witness(u, ha, witness_b).witness) {
    throw PreconditionError(to_string(witness_b) + " is not an ordering witness for " +
                            to_string(ha));
  }
  const ObjectId out = eq.e()(witness_b);
  if (!check_ordering_witness(v, a, out).witness) {
    throw PostconditionViolation(to_string(out) + " is not an ordering witness for " +
                                 to_string(a));
  }
  return out;
}

}  // namespace arrowlab

#include "arrowlab/boolean.hpp"

#include <algorithm>

#include "arrowlab/derived.hpp"

namespace arrowlab {

namespace {

bool is_algebra(const ObjectId& obj) {
  return obj.payload.size() == 1 && obj.payload[0] >= 1 && obj.payload[0] <= 20;
}

class Fbas final : public FiniteCategory {
 public:
  std::string tag() const override { return "FBAS"; }
  nlohmann::json descriptor() const override { return {{"category", tag()}}; }
  std::vector<ObjectId> objects_at(int grade) const override {
    if (grade < 1) return {};
    return {ObjectId{tag(), {grade}, grade}};
  }
  bool is_object(const ObjectId& obj) const override { return is_algebra(obj); }
  int grade_of(const Payload& p) const override { return p.at(0); }
  Morphism identity(const ObjectId& a) const override {
    require_object(a);
    Payload t(std::size_t{1} << a.payload[0]);
    for (std::size_t s = 0; s < t.size(); ++s) t[s] = static_cast<int>(s);
    return {a, a, t};
  }

 protected:
  // Every homomorphism P(m) -> P(n) is S |-> g^-1(S) for some g : [n] -> [m];
  // the surjective ones are kept by inspecting the table.
  std::vector<Morphism> hom_unsorted(const ObjectId& a, const ObjectId& b) const override {
    const int m = a.payload[0];
    const int n = b.payload[0];
    std::vector<Morphism> out;
    std::vector<int> g(n, 0);
    const std::size_t targets = std::size_t{1} << n;
    while (true) {
      auto table = preimage_table(g, m);
      std::vector<bool> hit(targets, false);
      for (int x : table) hit[x] = true;
      if (std::all_of(hit.begin(), hit.end(), [](bool h) { return h; })) {
        out.push_back({a, b, std::move(table)});
      }
      int i = n - 1;
      while (i >= 0 && g[i] == m - 1) g[i--] = 0;
      if (i < 0) break;
      ++g[i];
    }
    return out;
  }
  Morphism compose_checked(const Morphism& g, const Morphism& f) const override {
    Payload t(f.payload.size());
    for (std::size_t s = 0; s < t.size(); ++s) t[s] = g.payload.at(f.payload[s]);
    return {f.dom, g.cod, t};
  }
};

}  // namespace

CategoryPtr fbas_category() {
  static const CategoryPtr cat = std::make_shared<Fbas>();
  return cat;
}

ObjectId boolean_algebra(int atoms) { return fbas_category()->object({atoms}); }

Payload preimage_table(const std::vector<int>& g, int m) {
  Payload t(std::size_t{1} << m, 0);
  for (std::size_t s = 0; s < t.size(); ++s) {
    int image = 0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (s >> g[j] & 1) image |= 1 << j;
    }
    t[s] = image;
  }
  return t;
}

Partition congruence_of(const Morphism& h) { return canonical_partition(h.payload); }

EquivalenceImpl stone_duality() {
  auto fsi = fsi_category();
  auto dual = opposite(fbas_category());
  auto fbas = fbas_category();

  // f : [m] -> [n] becomes the op-arrow P(m) -> P(n), i.e. P(n) -> P(m).
  FunctorImpl e(
      "Stone", fsi, dual, [dual](const ObjectId& a) { return dual->object(a.payload); },
      [fbas](const Morphism& f) {
        auto pm = fbas->object(f.dom.payload);
        auto pn = fbas->object(f.cod.payload);
        return op(Morphism{pn, pm, preimage_table(f.payload, f.cod.payload[0])});
      });
  // op-arrow P(m) -> P(n) with base h : P(n) -> P(m) gives f(i) = the atom j
  // with i in h({j}).
  FunctorImpl h(
      "Atoms", dual, fsi, [fsi](const ObjectId& a) { return fsi->object(a.payload); },
      [fsi](const Morphism& arrow) {
        const auto base = unop(arrow);
        const int n = base.dom.payload[0];
        const int m = base.cod.payload[0];
        Payload f(m, -1);
        for (int j = 0; j < n; ++j) {
          const int image = base.payload.at(std::size_t{1} << j);
          for (int i = 0; i < m; ++i) {
            if (image >> i & 1) f[i] = j;
          }
        }
        return Morphism{fsi->object(arrow.dom.payload), fsi->object(arrow.cod.payload), f};
      });
  auto he = compose(h, e);
  auto eh = compose(e, h);
  return EquivalenceImpl("Stone duality", e, h,
                         identity_transformation("eta", identity_functor(fsi), he),
                         identity_transformation("eps", identity_functor(dual), eh));
}

}  // namespace arrowlab

#include "arrowlab/ordered_power.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "arrowlab/sets.hpp"

namespace arrowlab {

OrderedCarrier OrderedCarrier::natural(int size) {
  OrderedCarrier c;
  c.rank.resize(size);
  std::iota(c.rank.begin(), c.rank.end(), 0);
  return c;
}

std::strong_ordering antilex_compare(const OrderedCarrier& base, const std::vector<int>& pi,
                                     const std::vector<int>& x, const std::vector<int>& y) {
  if (x.size() != pi.size() || y.size() != pi.size()) {
    throw DomainError("antilex_compare: tuple length differs from the permutation length");
  }
  for (int t = static_cast<int>(pi.size()) - 1; t >= 0; --t) {
    const int a = base.rank.at(x[pi[t] - 1]);
    const int b = base.rank.at(y[pi[t] - 1]);
    if (a != b) return a <=> b;
  }
  return std::strong_ordering::equal;
}

namespace {

std::vector<std::vector<int>> all_tuples(int q, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> x(n, 0);
  while (true) {
    out.push_back(x);
    int i = n - 1;
    while (i >= 0 && x[i] == q - 1) x[i--] = 0;
    if (i < 0) break;
    ++x[i];
  }
  return out;
}

std::vector<int> identity_permutation(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

bool is_permutation_of(const std::vector<int>& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<bool> seen(n + 1, false);
  for (int x : p) {
    if (x < 1 || x > n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

bool covers_indices(const std::vector<int>& tuple, int n) {
  std::vector<bool> seen(n + 1, false);
  for (int i : tuple) {
    if (i < 1 || i > n) return false;
    seen[i] = true;
  }
  return std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; });
}

void require_embedding(const std::vector<int>& tuple, int n) {
  if (n < 1 || !covers_indices(tuple, n)) {
    throw DomainError("index tuple " + to_string(tuple) + " is not an embedding of A^" +
                      std::to_string(n));
  }
}

}  // namespace

std::vector<std::vector<int>> sorted_power(const OrderedCarrier& base, const std::vector<int>& pi) {
  auto out = all_tuples(base.size(), static_cast<int>(pi.size()));
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    return antilex_compare(base, pi, x, y) < 0;
  });
  return out;
}

std::vector<int> apply_tuple(const std::vector<int>& tuple, const std::vector<int>& x) {
  std::vector<int> out(tuple.size());
  for (std::size_t s = 0; s < tuple.size(); ++s) out[s] = x.at(tuple[s] - 1);
  return out;
}

std::vector<IndexTupleMor> enumerate_ordered_homs(int n, const std::vector<int>& pi, int m,
                                                  const std::vector<int>& sigma) {
  if (!is_permutation_of(pi, n) || !is_permutation_of(sigma, m)) {
    throw DomainError("enumerate_ordered_homs: pi, sigma must be permutations of 1..n, 1..m");
  }
  std::vector<int> pi_inv(n + 1);
  for (int k = 1; k <= n; ++k) pi_inv[pi[k - 1]] = k;
  std::vector<IndexTupleMor> out;
  for (auto zero_based : all_tuples(n, m)) {
    std::vector<int> tuple(m);
    for (int s = 0; s < m; ++s) tuple[s] = zero_based[s] + 1;
    std::vector<int> j(m);
    for (int s = 0; s < m; ++s) j[s] = pi_inv[tuple[sigma[s] - 1]];
    if (j[m - 1] != n) continue;
    bool ok = true;
    for (int s = 0; s < m - 1 && ok; ++s) {
      if (j[s] >= n) continue;
      std::set<int> later(j.begin() + s + 1, j.end());
      for (int k = j[s] + 1; k <= n && ok; ++k) ok = later.contains(k);
    }
    if (ok) out.push_back({tuple, covers_indices(tuple, n)});
  }
  return out;
}

bool is_ordered_hom_oracle(const OrderedCarrier& base, const std::vector<int>& tuple,
                           const std::vector<int>& pi, const std::vector<int>& sigma) {
  if (tuple.size() != sigma.size()) return false;
  for (int i : tuple) {
    if (i < 1 || i > static_cast<int>(pi.size())) return false;
  }
  const auto power = all_tuples(base.size(), static_cast<int>(pi.size()));
  std::vector<std::vector<int>> images;
  images.reserve(power.size());
  for (const auto& x : power) images.push_back(apply_tuple(tuple, x));
  for (std::size_t a = 0; a < power.size(); ++a) {
    for (std::size_t b = 0; b < power.size(); ++b) {
      if (antilex_compare(base, pi, power[a], power[b]) <= 0 &&
          antilex_compare(base, sigma, images[a], images[b]) > 0) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<int>> permutations(int n) {
  std::vector<std::vector<int>> out;
  auto p = identity_permutation(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

Payload ordered_payload(int n, const std::vector<int>& pi) {
  Payload p{n};
  p.insert(p.end(), pi.begin(), pi.end());
  return p;
}

std::vector<int> perm_of(const ObjectId& obj) {
  return {obj.payload.begin() + 1, obj.payload.end()};
}

Morphism compose_tuples(const Morphism& g, const Morphism& f) {
  Payload t(g.payload.size());
  for (std::size_t s = 0; s < t.size(); ++s) t[s] = f.payload.at(g.payload[s] - 1);
  return {f.dom, g.cod, t};
}

std::vector<std::vector<int>> embedding_tuples(int n, int m) {
  std::vector<std::vector<int>> out;
  if (m < n) return out;
  for (auto zero_based : all_tuples(n, m)) {
    for (auto& i : zero_based) ++i;
    if (covers_indices(zero_based, n)) out.push_back(zero_based);
  }
  return out;
}

class OrderedPowers final : public FiniteCategory {
 public:
  OrderedPowers(OrderedCarrier base, HomSource source, std::string label)
      : base_(std::move(base)), source_(source), label_(std::move(label)) {}

  std::string tag() const override { return label_; }
  nlohmann::json descriptor() const override {
    if (label_ == "OFBA") return {{"category", "OFBA"}};
    return {{"category", "OV"},
            {"base", base_.size()},
            {"order", base_.rank},
            {"source", source_ == HomSource::closed_form ? "closed_form" : "brute_force"}};
  }
  std::vector<ObjectId> objects_at(int n) const override {
    std::vector<ObjectId> out;
    if (n < 1) return out;
    for (const auto& pi : permutations(n)) out.push_back({tag(), ordered_payload(n, pi), n});
    return out;
  }
  bool is_object(const ObjectId& obj) const override {
    const auto& p = obj.payload;
    return !p.empty() && p[0] >= 1 && is_permutation_of({p.begin() + 1, p.end()}, p[0]);
  }
  int grade_of(const Payload& p) const override { return p.at(0) == -1 ? p.at(1) : p.at(0); }

  bool is_member(const ObjectId& obj) const override {
    if (is_object(obj)) return true;
    const auto& p = obj.payload;
    if (p.size() < 2 || p[0] != -1 || p[1] < 1) return false;
    const int n = p[1];
    const auto power = all_tuples(base_.size(), n);
    if (p.size() != power.size() + 2) return false;
    for (const auto& pi : permutations(n)) {
      if (ranks(pi, power) == Payload(p.begin() + 2, p.end())) return true;
    }
    return false;
  }

  // Images of embeddings A^n -> A^m, one per partition of the m positions,
  // with the order pulled back from (m, sigma).
  std::vector<ObjectId> substructures(const ObjectId& obj) const override {
    require_object(obj);
    const int m = obj.payload[0];
    const auto sigma = perm_of(obj);
    std::vector<ObjectId> out;
    for (int n = 1; n <= m; ++n) {
      const auto power = all_tuples(base_.size(), n);
      for (const auto& blocks : set_partitions(m, n)) {
        std::vector<int> tuple(m);
        for (int t = 0; t < m; ++t) tuple[t] = blocks[t] + 1;
        auto pulled = pulled_back_ranks(tuple, sigma, power);
        auto pi = hp_decompose(tuple, n, sigma);
        if (ranks(pi, power) == pulled) {
          out.push_back({tag(), ordered_payload(n, pi), n});
        } else {
          Payload raw{-1, n};
          raw.insert(raw.end(), pulled.begin(), pulled.end());
          out.push_back({tag(), raw, n});
        }
      }
    }
    return out;
  }

  Morphism identity(const ObjectId& a) const override {
    require_object(a);
    return {a, a, identity_permutation(a.payload[0])};
  }

 protected:
  std::vector<Morphism> hom_unsorted(const ObjectId& a, const ObjectId& b) const override {
    const int n = a.payload[0];
    const int m = b.payload[0];
    const auto pi = perm_of(a);
    const auto sigma = perm_of(b);
    std::vector<Morphism> out;
    if (source_ == HomSource::closed_form) {
      for (auto& f : enumerate_ordered_homs(n, pi, m, sigma)) {
        if (f.embedding) out.push_back({a, b, std::move(f.tuple)});
      }
    } else {
      for (auto& t : embedding_tuples(n, m)) {
        if (is_ordered_hom_oracle(base_, t, pi, sigma)) out.push_back({a, b, std::move(t)});
      }
    }
    return out;
  }
  Morphism compose_checked(const Morphism& g, const Morphism& f) const override {
    return compose_tuples(g, f);
  }

 private:
  // rank of each tuple of `power` (base-q order) in the order for pi
  Payload ranks(const std::vector<int>& pi, const std::vector<std::vector<int>>& power) const {
    Payload order(power.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      return antilex_compare(base_, pi, power[x], power[y]) < 0;
    });
    Payload r(power.size());
    for (std::size_t i = 0; i < order.size(); ++i) r[order[i]] = static_cast<int>(i);
    return r;
  }

  Payload pulled_back_ranks(const std::vector<int>& tuple, const std::vector<int>& sigma,
                            const std::vector<std::vector<int>>& power) const {
    Payload order(power.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      return antilex_compare(base_, sigma, apply_tuple(tuple, power[x]),
                             apply_tuple(tuple, power[y])) < 0;
    });
    Payload r(power.size());
    for (std::size_t i = 0; i < order.size(); ++i) r[order[i]] = static_cast<int>(i);
    return r;
  }

  OrderedCarrier base_;
  HomSource source_;
  std::string label_;
};

class Powers final : public FiniteCategory {
 public:
  Powers(int base, std::string label) : base_(base), label_(std::move(label)) {}

  std::string tag() const override { return label_; }
  nlohmann::json descriptor() const override {
    if (label_ == "FBA") return {{"category", "FBA"}};
    return {{"category", "V"}, {"base", base_}};
  }
  std::vector<ObjectId> objects_at(int n) const override {
    if (n < 1) return {};
    return {ObjectId{tag(), {n}, n}};
  }
  bool is_object(const ObjectId& obj) const override {
    return obj.payload.size() == 1 && obj.payload[0] >= 1;
  }
  int grade_of(const Payload& p) const override { return p.at(0); }
  std::vector<ObjectId> substructures(const ObjectId& obj) const override {
    require_object(obj);
    std::vector<ObjectId> out;
    for (int n = 1; n <= obj.payload[0]; ++n) {
      for (std::size_t i = 0; i < stirling2(obj.payload[0], n); ++i) out.push_back({tag(), {n}, n});
    }
    return out;
  }
  Morphism identity(const ObjectId& a) const override {
    require_object(a);
    return {a, a, identity_permutation(a.payload[0])};
  }

 protected:
  std::vector<Morphism> hom_unsorted(const ObjectId& a, const ObjectId& b) const override {
    std::vector<Morphism> out;
    for (auto& t : embedding_tuples(a.payload[0], b.payload[0])) out.push_back({a, b, std::move(t)});
    return out;
  }
  Morphism compose_checked(const Morphism& g, const Morphism& f) const override {
    return compose_tuples(g, f);
  }

 private:
  int base_;
  std::string label_;
};

}  // namespace

CategoryPtr ov_fin_category(const OrderedCarrier& base, HomSource source) {
  if (base.size() < 2) throw DomainError("ordered powers need a carrier with at least 2 elements");
  if (!is_permutation_of([&] {
        std::vector<int> r(base.rank);
        for (auto& x : r) ++x;
        return r;
      }(), base.size())) {
    throw DomainError("carrier order must rank the elements 0..q-1");
  }
  return std::make_shared<OrderedPowers>(base, source, "OV(" + std::to_string(base.size()) + ")");
}

CategoryPtr ofba_category() {
  static const CategoryPtr cat =
      std::make_shared<OrderedPowers>(OrderedCarrier::natural(2), HomSource::closed_form, "OFBA");
  return cat;
}

CategoryPtr v_fin_category(int base_size) {
  if (base_size < 2) throw DomainError("powers need a carrier with at least 2 elements");
  return std::make_shared<Powers>(base_size, "V(" + std::to_string(base_size) + ")");
}

CategoryPtr fba_category() {
  static const CategoryPtr cat = std::make_shared<Powers>(2, "FBA");
  return cat;
}

ObjectId ordered_power(int n, const std::vector<int>& pi) {
  if (!is_permutation_of(pi, n)) throw DomainError("not a permutation of 1..n");
  return {"OV", ordered_payload(n, pi), n};
}

EquivalenceImpl skeleton_equivalence(CategoryPtr ofba, CategoryPtr ov) {
  return payload_identity_equivalence("skeleton " + ofba->tag() + " ~ " + ov->tag(), ofba, ov);
}

FunctorImpl forgetful_functor(CategoryPtr ordered, CategoryPtr plain) {
  return FunctorImpl(
      "U(" + ordered->tag() + ")", ordered, plain,
      [plain](const ObjectId& a) { return plain->object({a.payload.at(0)}); },
      [plain](const Morphism& f) {
        return Morphism{plain->object({f.dom.payload.at(0)}), plain->object({f.cod.payload.at(0)}),
                        f.payload};
      });
}

std::vector<int> hp_decompose(const std::vector<int>& tuple, int n, const std::vector<int>& sigma) {
  require_embedding(tuple, n);
  const int m = static_cast<int>(tuple.size());
  if (!is_permutation_of(sigma, m)) throw DomainError("sigma is not a permutation of 1..m");
  std::vector<int> max_block(n + 1, 0);
  for (int t = 1; t <= m; ++t) {
    const int s = tuple[sigma[t - 1] - 1];
    max_block[s] = std::max(max_block[s], t);
  }
  auto pi = identity_permutation(n);
  std::sort(pi.begin(), pi.end(), [&](int a, int b) { return max_block[a] < max_block[b]; });
  return pi;
}

std::vector<int> reasonable_extension(const std::vector<int>& tuple, int n,
                                      const std::vector<int>& pi) {
  require_embedding(tuple, n);
  if (!is_permutation_of(pi, n)) throw DomainError("pi is not a permutation of 1..n");
  std::vector<int> sigma;
  for (int s = 1; s <= n; ++s) {
    for (int t = 1; t <= static_cast<int>(tuple.size()); ++t) {
      if (tuple[t - 1] == pi[s - 1]) sigma.push_back(t);
    }
  }
  return sigma;
}

}  // namespace arrowlab

#include "arrowlab/derived.hpp"

#include <algorithm>

namespace arrowlab {

namespace {

class Opposite final : public FiniteCategory {
 public:
  explicit Opposite(CategoryPtr base) : base_(std::move(base)) {}

  const CategoryPtr& base() const { return base_; }

  std::string tag() const override { return "op(" + base_->tag() + ")"; }
  nlohmann::json descriptor() const override { return {{"category", "op"}, {"of", base_->descriptor()}}; }
  int min_grade() const override { return base_->min_grade(); }
  std::vector<ObjectId> objects_at(int grade) const override { return base_->objects_at(grade); }
  bool is_object(const ObjectId& obj) const override { return base_->is_object(obj); }
  int grade_of(const Payload& p) const override { return base_->grade_of(p); }
  bool is_member(const ObjectId& obj) const override { return base_->is_member(obj); }
  std::vector<ObjectId> substructures(const ObjectId& obj) const override {
    return base_->substructures(obj);
  }
  Morphism identity(const ObjectId& a) const override { return base_->identity(a); }
  bool contains(const Morphism& m) const override { return base_->contains(unop(m)); }

 protected:
  std::vector<Morphism> hom_unsorted(const ObjectId& a, const ObjectId& b) const override {
    auto out = base_->hom(b, a);
    for (auto& m : out) m = op(m);
    return out;
  }
  Morphism compose_checked(const Morphism& g, const Morphism& f) const override {
    return op(base_->compose(unop(f), unop(g)));
  }

 private:
  CategoryPtr base_;
};

Payload pack(const Payload& a, const Payload& b) {
  Payload out;
  out.reserve(a.size() + b.size() + 1);
  out.push_back(static_cast<int>(a.size()));
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::pair<Payload, Payload> unpack(const Payload& p) {
  if (p.empty() || p[0] < 0 || static_cast<std::size_t>(p[0]) + 1 > p.size()) {
    throw DomainError("malformed pair payload " + to_string(p));
  }
  auto mid = p.begin() + 1 + p[0];
  return {Payload(p.begin() + 1, mid), Payload(mid, p.end())};
}

class Product final : public FiniteCategory {
 public:
  Product(CategoryPtr first, CategoryPtr second)
      : first_(std::move(first)), second_(std::move(second)) {}

  const CategoryPtr& first() const { return first_; }
  const CategoryPtr& second() const { return second_; }

  std::string tag() const override {
    return "product(" + first_->tag() + "," + second_->tag() + ")";
  }
  nlohmann::json descriptor() const override {
    return {{"category", "product"}, {"left", first_->descriptor()}, {"right", second_->descriptor()}};
  }
  int min_grade() const override { return std::max(first_->min_grade(), second_->min_grade()); }
  std::vector<ObjectId> objects_at(int grade) const override {
    std::vector<ObjectId> out;
    for (int g1 = first_->min_grade(); g1 <= grade; ++g1) {
      for (int g2 = second_->min_grade(); g2 <= grade; ++g2) {
        if (std::max(g1, g2) != grade) continue;
        for (const auto& x : first_->objects_at(g1)) {
          for (const auto& y : second_->objects_at(g2)) out.push_back(pair(x, y));
        }
      }
    }
    return out;
  }
  bool is_object(const ObjectId& obj) const override {
    if (obj.payload.empty() || obj.payload[0] < 0 ||
        static_cast<std::size_t>(obj.payload[0]) + 1 > obj.payload.size()) {
      return false;
    }
    auto [a, b] = unpack(obj.payload);
    return first_->is_object({first_->tag(), a, 0}) && second_->is_object({second_->tag(), b, 0});
  }
  int grade_of(const Payload& p) const override {
    auto [a, b] = unpack(p);
    return std::max(first_->grade_of(a), second_->grade_of(b));
  }
  Morphism identity(const ObjectId& obj) const override {
    auto [x, y] = split(obj);
    return pair_morphism(first_->identity(x), second_->identity(y));
  }
  bool contains(const Morphism& m) const override {
    if (!is_object(m.dom) || !is_object(m.cod)) return false;
    auto [f, g] = split(m);
    return first_->contains(f) && second_->contains(g);
  }

  ObjectId pair(const ObjectId& x, const ObjectId& y) const {
    return {tag(), pack(x.payload, y.payload), std::max(x.grade, y.grade)};
  }
  std::pair<ObjectId, ObjectId> split(const ObjectId& obj) const {
    auto [a, b] = unpack(obj.payload);
    return {first_->object(a), second_->object(b)};
  }
  std::pair<Morphism, Morphism> split(const Morphism& m) const {
    auto [d1, d2] = split(m.dom);
    auto [c1, c2] = split(m.cod);
    auto [p1, p2] = unpack(m.payload);
    return {Morphism{d1, c1, p1}, Morphism{d2, c2, p2}};
  }

 protected:
  std::vector<Morphism> hom_unsorted(const ObjectId& a, const ObjectId& b) const override {
    auto [a1, a2] = split(a);
    auto [b1, b2] = split(b);
    auto h1 = first_->hom(a1, b1);
    auto h2 = second_->hom(a2, b2);
    std::vector<Morphism> out;
    out.reserve(h1.size() * h2.size());
    for (const auto& f : h1) {
      for (const auto& g : h2) out.push_back({a, b, pack(f.payload, g.payload)});
    }
    return out;
  }
  Morphism compose_checked(const Morphism& g, const Morphism& f) const override {
    auto [g1, g2] = split(g);
    auto [f1, f2] = split(f);
    auto c1 = first_->compose(g1, f1);
    auto c2 = second_->compose(g2, f2);
    return {f.dom, g.cod, pack(c1.payload, c2.payload)};
  }

 private:
  CategoryPtr first_, second_;
};

class Unit final : public FiniteCategory {
 public:
  std::string tag() const override { return "unit"; }
  nlohmann::json descriptor() const override { return {{"category", "unit"}}; }
  std::vector<ObjectId> objects_at(int grade) const override {
    if (grade != 1) return {};
    return {ObjectId{tag(), {}, 1}};
  }
  bool is_object(const ObjectId& obj) const override { return obj.payload.empty(); }
  int grade_of(const Payload&) const override { return 1; }
  Morphism identity(const ObjectId& a) const override {
    require_object(a);
    return {a, a, {}};
  }

 protected:
  std::vector<Morphism> hom_unsorted(const ObjectId& a, const ObjectId& b) const override {
    return {Morphism{a, b, {}}};
  }
  Morphism compose_checked(const Morphism& g, const Morphism& f) const override {
    return {f.dom, g.cod, {}};
  }
};

class Restricted final : public FiniteCategory {
 public:
  Restricted(CategoryPtr base, std::function<bool(const ObjectId&)> keep, std::string label)
      : base_(std::move(base)), keep_(std::move(keep)), label_(std::move(label)) {}

  std::string tag() const override { return label_; }
  nlohmann::json descriptor() const override {
    return {{"category", "restricted"}, {"label", label_}, {"of", base_->descriptor()}};
  }
  int min_grade() const override { return base_->min_grade(); }
  std::vector<ObjectId> objects_at(int grade) const override {
    auto all = base_->objects_at(grade);
    std::erase_if(all, [&](const ObjectId& o) { return !keep_(o); });
    return all;
  }
  bool is_object(const ObjectId& obj) const override {
    return base_->is_object(obj) && keep_(obj);
  }
  int grade_of(const Payload& p) const override { return base_->grade_of(p); }
  bool is_member(const ObjectId& obj) const override {
    if (!base_->is_member(obj)) return false;
    if (base_->is_object(obj)) return keep_(obj);
    return true;
  }
  std::vector<ObjectId> substructures(const ObjectId& obj) const override {
    return base_->substructures(obj);
  }
  Morphism identity(const ObjectId& a) const override {
    require_object(a);
    return base_->identity(a);
  }
  bool contains(const Morphism& m) const override {
    return is_object(m.dom) && is_object(m.cod) && base_->contains(m);
  }

 protected:
  std::vector<Morphism> hom_unsorted(const ObjectId& a, const ObjectId& b) const override {
    return base_->hom(a, b);
  }
  Morphism compose_checked(const Morphism& g, const Morphism& f) const override {
    return base_->compose(g, f);
  }

 private:
  CategoryPtr base_;
  std::function<bool(const ObjectId&)> keep_;
  std::string label_;
};

class Corrupted final : public FiniteCategory {
 public:
  Corrupted(CategoryPtr base, Morphism victim, int i, int j)
      : base_(std::move(base)), victim_(std::move(victim)), i_(i), j_(j) {}

  std::string tag() const override { return "corrupted(" + base_->tag() + ")"; }
  nlohmann::json descriptor() const override { return base_->descriptor(); }
  int min_grade() const override { return base_->min_grade(); }
  std::vector<ObjectId> objects_at(int grade) const override { return base_->objects_at(grade); }
  bool is_object(const ObjectId& obj) const override { return base_->is_object(obj); }
  int grade_of(const Payload& p) const override { return base_->grade_of(p); }
  Morphism identity(const ObjectId& a) const override { return base_->identity(a); }

 protected:
  std::vector<Morphism> hom_unsorted(const ObjectId& a, const ObjectId& b) const override {
    return base_->hom(a, b);
  }
  Morphism compose_checked(const Morphism& g, const Morphism& f) const override {
    auto out = base_->compose(g, f);
    if (out == victim_) std::swap(out.payload.at(i_), out.payload.at(j_));
    return out;
  }

 private:
  CategoryPtr base_;
  Morphism victim_;
  int i_, j_;
};

const Product& as_product(const FiniteCategory& prod) {
  const auto* p = dynamic_cast<const Product*>(&prod);
  if (p == nullptr) throw DomainError(prod.tag() + " is not a product category");
  return *p;
}

}  // namespace

CategoryPtr opposite(CategoryPtr cat) {
  if (const auto* o = dynamic_cast<const Opposite*>(cat.get())) return o->base();
  return std::make_shared<Opposite>(std::move(cat));
}

Morphism unop(const Morphism& m) { return {m.cod, m.dom, m.payload}; }
Morphism op(const Morphism& m) { return {m.cod, m.dom, m.payload}; }

CategoryPtr product(CategoryPtr first, CategoryPtr second) {
  return std::make_shared<Product>(std::move(first), std::move(second));
}

ObjectId pair_object(const ObjectId& first, const ObjectId& second) {
  return {"product(" + first.category + "," + second.category + ")",
          pack(first.payload, second.payload), std::max(first.grade, second.grade)};
}

Morphism pair_morphism(const Morphism& first, const Morphism& second) {
  return {pair_object(first.dom, second.dom), pair_object(first.cod, second.cod),
          pack(first.payload, second.payload)};
}

std::pair<ObjectId, ObjectId> split_object(const FiniteCategory& prod, const ObjectId& obj) {
  return as_product(prod).split(obj);
}

std::pair<Morphism, Morphism> split_morphism(const FiniteCategory& prod, const Morphism& m) {
  return as_product(prod).split(m);
}

std::pair<CategoryPtr, CategoryPtr> factors(const FiniteCategory& prod) {
  const auto& p = as_product(prod);
  return {p.first(), p.second()};
}

CategoryPtr unit_category() { return std::make_shared<Unit>(); }

CategoryPtr restricted(CategoryPtr base, std::function<bool(const ObjectId&)> keep,
                       std::string label) {
  return std::make_shared<Restricted>(std::move(base), std::move(keep), std::move(label));
}

CategoryPtr corrupted_composition(CategoryPtr base, Morphism victim, int i, int j) {
  return std::make_shared<Corrupted>(std::move(base), std::move(victim), i, j);
}

}  // namespace arrowlab

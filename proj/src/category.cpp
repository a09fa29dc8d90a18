#include "arrowlab/category.hpp"

#include <algorithm>
#include <sstream>

namespace arrowlab {

std::string to_string(const Payload& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ']';
  return os.str();
}

std::string to_string(const ObjectId& obj) { return obj.category + to_string(obj.payload); }

std::string to_string(const Morphism& m) {
  return to_string(m.dom) + " -" + to_string(m.payload) + "-> " + to_string(m.cod);
}

std::vector<ObjectId> FiniteCategory::objects(int max_grade) const {
  std::vector<ObjectId> out;
  for (int g = min_grade(); g <= max_grade; ++g) {
    auto level = objects_at(g);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<ObjectId> FiniteCategory::substructures(const ObjectId&) const { return {}; }

std::vector<Morphism> FiniteCategory::hom(const ObjectId& a, const ObjectId& b) const {
  require_object(a);
  require_object(b);
  auto out = hom_unsorted(a, b);
  std::sort(out.begin(), out.end(),
            [](const Morphism& x, const Morphism& y) { return x.payload < y.payload; });
  return out;
}

Morphism FiniteCategory::compose(const Morphism& g, const Morphism& f) const {
  if (!(f.cod == g.dom)) {
    throw DomainError("compose: cod " + to_string(f.cod) + " != dom " + to_string(g.dom));
  }
  return compose_checked(g, f);
}

bool FiniteCategory::contains(const Morphism& m) const {
  if (!is_object(m.dom) || !is_object(m.cod)) return false;
  auto hs = hom(m.dom, m.cod);
  return std::any_of(hs.begin(), hs.end(),
                     [&](const Morphism& h) { return h.payload == m.payload; });
}

ObjectId FiniteCategory::object(Payload payload) const {
  ObjectId obj{tag(), std::move(payload), 0};
  if (!is_object(obj)) throw DomainError(tag() + ": not an object: " + to_string(obj.payload));
  obj.grade = grade_of(obj.payload);
  return obj;
}

void FiniteCategory::require_object(const ObjectId& obj) const {
  if (!is_object(obj)) throw DomainError(tag() + ": not an object: " + to_string(obj));
}

}  // namespace arrowlab

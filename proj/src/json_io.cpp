#include "arrowlab/json_io.hpp"

#include <map>
#include <set>

#include "arrowlab/boolean.hpp"
#include "arrowlab/derived.hpp"
#include "arrowlab/ordered_power.hpp"
#include "arrowlab/sets.hpp"
#include "arrowlab/trees.hpp"
#include "arrowlab/vector_space.hpp"

namespace arrowlab {

namespace {

void only_fields(const nlohmann::json& j, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw DomainError("category description must be a JSON object");
  std::set<std::string> ok;
  for (const char* a : allowed) ok.insert(a);
  ok.insert("category");
  for (const auto& [key, value] : j.items()) {
    if (!ok.contains(key)) {
      throw DomainError("unknown field '" + key + "' in category " + j.value("category", "?"));
    }
  }
}

int int_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw DomainError("category field '" + std::string(key) + "' must be an integer");
  }
  return j[key].get<int>();
}

class TableCategory final : public FiniteCategory {
 public:
  explicit TableCategory(const nlohmann::json& j) : source_(j) {
    name_ = j.value("name", "table");
    for (const auto& o : j.at("objects")) {
      objects_.push_back({name_, o.at("payload").get<Payload>(), o.at("grade").get<int>()});
    }
    auto obj_at = [&](const nlohmann::json& idx) -> const ObjectId& {
      const auto i = idx.get<std::size_t>();
      if (i >= objects_.size()) throw DomainError("object index " + std::to_string(i) + " out of range");
      return objects_[i];
    };
    for (const auto& m : j.at("morphisms")) {
      morphisms_.push_back({obj_at(m.at("dom")), obj_at(m.at("cod")), m.at("payload").get<Payload>()});
    }
    auto mor_at = [&](const nlohmann::json& idx) -> std::size_t {
      const auto i = idx.get<std::size_t>();
      if (i >= morphisms_.size()) throw DomainError("morphism index " + std::to_string(i) + " out of range");
      return i;
    };
    const auto& ids = j.at("identities");
    if (ids.size() != objects_.size()) throw DomainError("one identity per object is required");
    for (std::size_t i = 0; i < ids.size(); ++i) identities_[objects_[i].payload] = mor_at(ids[i]);
    for (const auto& row : j.at("compose")) {
      if (!row.is_array() || row.size() != 3) throw DomainError("compose rows are [g, f, g.f]");
      compose_[{mor_at(row[0]), mor_at(row[1])}] = mor_at(row[2]);
    }
    for (std::size_t i = 0; i < morphisms_.size(); ++i) index_[morphisms_[i]] = i;
  }

  std::string tag() const override { return name_; }
  nlohmann::json descriptor() const override { return source_; }
  int min_grade() const override {
    int g = 1;
    for (const auto& o : objects_) g = std::min(g, o.grade);
    return g;
  }
  std::vector<ObjectId> objects_at(int grade) const override {
    std::vector<ObjectId> out;
    for (const auto& o : objects_) {
      if (o.grade == grade) out.push_back(o);
    }
    std::ranges::sort(out);
    return out;
  }
  bool is_object(const ObjectId& obj) const override { return identities_.contains(obj.payload); }
  int grade_of(const Payload& payload) const override {
    for (const auto& o : objects_) {
      if (o.payload == payload) return o.grade;
    }
    throw DomainError("no object " + to_string(payload) + " in " + name_);
  }
  Morphism identity(const ObjectId& a) const override {
    require_object(a);
    return morphisms_[identities_.at(a.payload)];
  }

 protected:
  std::vector<Morphism> hom_unsorted(const ObjectId& a, const ObjectId& b) const override {
    std::vector<Morphism> out;
    for (const auto& m : morphisms_) {
      if (m.dom == a && m.cod == b) out.push_back(m);
    }
    return out;
  }
  Morphism compose_checked(const Morphism& g, const Morphism& f) const override {
    auto gi = index_.find(g);
    auto fi = index_.find(f);
    if (gi == index_.end() || fi == index_.end()) {
      throw DomainError("composition of morphisms outside " + name_);
    }
    auto it = compose_.find({gi->second, fi->second});
    if (it == compose_.end()) {
      throw DomainError("composition " + to_string(g) + " . " + to_string(f) + " is not tabulated");
    }
    return morphisms_[it->second];
  }

 private:
  nlohmann::json source_;
  std::string name_;
  std::vector<ObjectId> objects_;
  std::vector<Morphism> morphisms_;
  std::map<Payload, std::size_t> identities_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> compose_;
  std::map<Morphism, std::size_t> index_;
};

}  // namespace

CategoryPtr table_category(const nlohmann::json& j) {
  only_fields(j, {"name", "objects", "morphisms", "identities", "compose"});
  try {
    return std::make_shared<TableCategory>(j);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed category table: ") + e.what());
  }
}

CategoryPtr category_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("category") || !j["category"].is_string()) {
    throw DomainError("category description needs a string field 'category'");
  }
  const auto name = j["category"].get<std::string>();
  if (name == "FSI" || name == "FSS" || name == "FBAS" || name == "FBA" || name == "OFBA" ||
      name == "TREE" || name == "HTREE" || name == "unit") {
    only_fields(j, {});
    if (name == "FSI") return fsi_category();
    if (name == "FSS") return fss_category();
    if (name == "FBAS") return fbas_category();
    if (name == "FBA") return fba_category();
    if (name == "OFBA") return ofba_category();
    if (name == "unit") return unit_category();
    return tree_category(name == "HTREE");
  }
  if (name == "OV") {
    only_fields(j, {"base", "order", "source"});
    OrderedCarrier base = OrderedCarrier::natural(int_field(j, "base"));
    if (j.contains("order")) base.rank = j["order"].get<std::vector<int>>();
    if (static_cast<int>(base.rank.size()) != int_field(j, "base")) {
      throw DomainError("OV order must rank every element of the base");
    }
    const auto source = j.value("source", "closed_form");
    if (source != "closed_form" && source != "brute_force") {
      throw DomainError("OV source must be 'closed_form' or 'brute_force'");
    }
    return ov_fin_category(base, source == "closed_form" ? HomSource::closed_form : HomSource::brute_force);
  }
  if (name == "V") {
    only_fields(j, {"base"});
    return v_fin_category(int_field(j, "base"));
  }
  if (name == "VEC-INJ" || name == "VEC-SURJ") {
    only_fields(j, {"p"});
    auto cats = vector_space_categories(int_field(j, "p"));
    return name == "VEC-INJ" ? cats.injective : cats.surjective;
  }
  if (name == "op") {
    only_fields(j, {"of"});
    return opposite(category_from_json(j.at("of")));
  }
  if (name == "product") {
    only_fields(j, {"left", "right"});
    return product(category_from_json(j.at("left")), category_from_json(j.at("right")));
  }
  if (name == "table") return table_category(j);
  throw DomainError("unknown category '" + name + "'");
}

}  // namespace arrowlab

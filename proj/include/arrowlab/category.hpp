#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "arrowlab/errors.hpp"

namespace arrowlab {

using Payload = std::vector<int>;

/// An object of a finite category. Equality is decided by the payload alone;
/// each concrete category fixes a canonical payload encoding.
struct ObjectId {
  std::string category;
  Payload payload;
  int grade = 0;

  bool operator==(const ObjectId& other) const { return payload == other.payload; }
  std::strong_ordering operator<=>(const ObjectId& other) const {
    return payload <=> other.payload;
  }
};

/// A morphism with extensional equality: (dom, cod, payload).
struct Morphism {
  ObjectId dom;
  ObjectId cod;
  Payload payload;

  bool operator==(const Morphism&) const = default;
  std::strong_ordering operator<=>(const Morphism&) const = default;
};

std::string to_string(const ObjectId& obj);
std::string to_string(const Morphism& m);
std::string to_string(const Payload& p);

/// Capability bundle shared by every concrete and derived category.
///
/// Hom-sets are returned in ascending payload order; that order is the
/// "deterministic hom order" used for tie-breaking everywhere. Values of this
/// type are immutable after construction and may be shared across threads.
class FiniteCategory {
 public:
  virtual ~FiniteCategory() = default;

  virtual std::string tag() const = 0;
  /// JSON description from which `category_from_json` rebuilds the category.
  virtual nlohmann::json descriptor() const = 0;

  virtual int min_grade() const { return 1; }
  virtual std::vector<ObjectId> objects_at(int grade) const = 0;
  /// All objects with grade <= max_grade, grade ascending.
  std::vector<ObjectId> objects(int max_grade) const;

  /// Well-formed canonical object of this category.
  virtual bool is_object(const ObjectId& obj) const = 0;
  /// Grade of a well-formed payload.
  virtual int grade_of(const Payload& payload) const = 0;
  /// Object with this payload, tagged and graded; throws DomainError if malformed.
  ObjectId object(Payload payload) const;
  /// Class membership up to isomorphism, used by hereditary-property checks.
  /// Defaults to is_object.
  virtual bool is_member(const ObjectId& candidate) const { return is_object(candidate); }
  /// Substructures of `obj` as candidate objects; members or not.
  virtual std::vector<ObjectId> substructures(const ObjectId& obj) const;

  std::vector<Morphism> hom(const ObjectId& a, const ObjectId& b) const;
  virtual Morphism identity(const ObjectId& a) const = 0;
  /// g . f (apply f first); requires cod(f) == dom(g).
  Morphism compose(const Morphism& g, const Morphism& f) const;
  /// True iff m is an element of hom(dom m, cod m).
  virtual bool contains(const Morphism& m) const;

  bool has_arrow(const ObjectId& a, const ObjectId& b) const { return !hom(a, b).empty(); }

 protected:
  virtual std::vector<Morphism> hom_unsorted(const ObjectId& a, const ObjectId& b) const = 0;
  virtual Morphism compose_checked(const Morphism& g, const Morphism& f) const = 0;

  void require_object(const ObjectId& obj) const;
};

using CategoryPtr = std::shared_ptr<const FiniteCategory>;

}  // namespace arrowlab

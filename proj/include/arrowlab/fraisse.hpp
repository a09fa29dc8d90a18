#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arrowlab/category.hpp"
#include "arrowlab/functor.hpp"

namespace arrowlab {

enum class ClosureProperty { hp, jep, ap, order_expansion, reasonable, ordering };
enum class ClosureStatus { pass, fail, inconclusive };

std::string to_string(ClosureProperty p);
std::string to_string(ClosureStatus s);

/// Outcome of a bounded closure check. A failing report carries a concrete
/// counterexample; JEP and AP are never reported as failing because an
/// amalgam may exist beyond the candidate budget.
struct ClosureReport {
  ClosureProperty property = ClosureProperty::hp;
  int bound = 0;
  ClosureStatus status = ClosureStatus::pass;
  nlohmann::json counterexample;
  nlohmann::json certificate = nlohmann::json::array();
  std::string detail;
  std::size_t checked = 0;
};

nlohmann::json to_json(const ObjectId& obj);
nlohmann::json to_json(const Morphism& m);

/// Every substructure of every object of grade <= bound is a member.
ClosureReport check_HP(const FiniteCategory& cat, int bound);

/// Each pair of objects of grade <= bound embeds into one of the first
/// `budget` candidates.
ClosureReport check_JEP(const FiniteCategory& cat, int bound, const std::vector<ObjectId>& candidates,
                        std::uint64_t budget);
/// Each span f : A -> B, g : A -> C at grade <= bound has u : B -> D,
/// v : C -> D with u . f = v . g for one of the first `budget` candidates D.
ClosureReport check_AP(const FiniteCategory& cat, int bound, const std::vector<ObjectId>& candidates,
                       std::uint64_t budget);

/// Objects of U's source at the grade of x that U sends to x.
std::vector<ObjectId> expansions(const FunctorImpl& u, const ObjectId& x);

/// U is onto the objects of its target at grade <= bound.
ClosureReport check_order_expansion(const FunctorImpl& u, int bound);

/// Suggested expansion of cod(f) that makes f order preserving from a_ordered.
using ExtensionHint = std::function<std::optional<ObjectId>(const Morphism& f, const ObjectId& a_ordered)>;

/// For every f : A -> B at grade <= bound and every expansion A< there is an
/// expansion B< and g : A< -> B< with U(g) = f. The hint is tried first; the
/// remaining expansions are searched when it is absent or wrong.
ClosureReport check_reasonable(const FunctorImpl& u, int bound, const ExtensionHint& hint = {});

/// Hint for ordered powers built from reasonable_extension.
ExtensionHint ordered_power_hint(CategoryPtr ordered);

struct OrderingCheck {
  bool witness = false;
  std::optional<std::pair<ObjectId, ObjectId>> refuting;
};

/// Every expansion of a embeds into every expansion of b.
OrderingCheck check_ordering_witness(const FunctorImpl& u, const ObjectId& a, const ObjectId& b);

struct OrderingSearch {
  std::optional<ObjectId> witness;
  int last_grade = 0;
  std::size_t tried = 0;
};

/// First candidate (at most `budget` are tried) that is an ordering witness for a.
OrderingSearch find_ordering_witness(const FunctorImpl& u, const ObjectId& a,
                                     const std::vector<ObjectId>& candidates, std::uint64_t budget);

}  // namespace arrowlab

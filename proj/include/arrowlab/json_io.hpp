#pragma once

#include <json.hpp>

#include "arrowlab/category.hpp"

namespace arrowlab {

/// Rebuilds a category from its description:
///   {"category": "FSI" | "FSS" | "FBAS" | "FBA" | "OFBA" | "TREE" | "HTREE" | "unit"}
///   {"category": "OV", "base": q, "order": [...], "source": "closed_form" | "brute_force"}
///   {"category": "V", "base": q}
///   {"category": "VEC-INJ" | "VEC-SURJ", "p": p}
///   {"category": "op", "of": {...}}
///   {"category": "product", "left": {...}, "right": {...}}
///   {"category": "table", ...}  (see table_category)
/// Throws DomainError naming the offending field.
CategoryPtr category_from_json(const nlohmann::json& j);

/// Category given by explicit tables:
///   {"category": "table", "name": s,
///    "objects": [{"payload": [...], "grade": g}, ...],
///    "morphisms": [{"dom": i, "cod": j, "payload": [...]}, ...],
///    "identities": [m_0, m_1, ...],
///    "compose": [[g, f, g.f], ...]}
/// Object and morphism references are indices into the lists.
CategoryPtr table_category(const nlohmann::json& j);

}  // namespace arrowlab

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arrowlab/category.hpp"
#include "arrowlab/kernels.hpp"

namespace arrowlab {

/// Which items are colored: morphisms A -> C, or subobject classes of A in C.
enum class Variant { hom, subobject };

std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

/// The colored items of one (A, C) pair in one category, in deterministic order.
/// For the subobject variant each item is a class representative and arbitrary
/// morphisms A -> C are located through their class.
class ItemSet {
 public:
  ItemSet(CategoryPtr cat, ObjectId a, ObjectId c, Variant variant);

  const FiniteCategory& category() const { return *cat_; }
  const CategoryPtr& category_ptr() const { return cat_; }
  const ObjectId& source() const { return a_; }
  const ObjectId& target() const { return c_; }
  Variant variant() const { return variant_; }
  const std::vector<Morphism>& items() const { return items_; }
  const std::vector<Morphism>& source_automorphisms() const { return aut_; }
  int size() const { return static_cast<int>(items_.size()); }

  /// Index of the item containing f : A -> C; throws DomainError otherwise.
  int index_of(const Morphism& f) const;

 private:
  CategoryPtr cat_;
  ObjectId a_, c_;
  Variant variant_;
  std::vector<Morphism> aut_;
  std::vector<Morphism> items_;
  std::map<Payload, int> index_;
};

/// A total k-coloring of an item set. Colors are 1..k.
struct Coloring {
  std::shared_ptr<const ItemSet> items;
  std::vector<int> colors;
  int k = 2;

  int color_of(const Morphism& f) const { return colors.at(items->index_of(f)); }
};

/// Coloring from its rank in base k, item 0 most significant.
Coloring coloring_from_rank(std::shared_ptr<const ItemSet> items, int k, std::uint64_t rank);
std::uint64_t coloring_rank(const Coloring& chi);

/// The statement C -> (B)^A_k (subobject variant) or C -hom-> (B)^A_k.
struct ArrowQuery {
  CategoryPtr cat;
  ObjectId c, b, a;
  int k = 2;
  Variant variant = Variant::subobject;
};

std::string arrow_notation(const ArrowQuery& q);

/// Rejects queries that violate A -> B -> C or k >= 2.
void validate_query(const ArrowQuery& q);

struct WitnessAnswer {
  int color = 0;
  Morphism w;
};

/// Items of B that w must monochromatize: hom(A, B) or one morphism per class.
std::vector<Morphism> pattern_morphisms(const FiniteCategory& cat, const ObjectId& a,
                                        const ObjectId& b, Variant variant);

/// Naive check that every item of w . items(B) has color `answer.color`.
bool is_monochromatic(const ArrowQuery& q, const Coloring& chi, const WitnessAnswer& answer);

/// Naive re-validation of a bad coloring: every w : B -> C sees >= 2 colors.
/// Does not use the hypergraph built by check_arrow.
bool is_bad_coloring(const ArrowQuery& q, const Coloring& chi, std::string* reason = nullptr);

/// A proven arrow packaged as a procedure: coloring -> (color, witness). Every
/// answer is checked against the monochromatic postcondition before it is
/// returned; a failure throws PostconditionViolation.
class RamseyOracle {
 public:
  using Finder = std::function<WitnessAnswer(const Coloring&)>;

  RamseyOracle(ArrowQuery query, std::shared_ptr<const ItemSet> items, Finder finder);

  const ArrowQuery& query() const { return query_; }
  const std::shared_ptr<const ItemSet>& items() const { return items_; }

  WitnessAnswer evaluate(const Coloring& chi) const;
  WitnessAnswer evaluate(const std::vector<int>& colors) const;
  /// Evaluation without the postcondition check (used to test the check).
  WitnessAnswer evaluate_unchecked(const Coloring& chi) const { return finder_(chi); }

 private:
  ArrowQuery query_;
  std::shared_ptr<const ItemSet> items_;
  std::shared_ptr<const std::vector<Morphism>> pattern_;
  Finder finder_;
};

/// Colored items plus, for every w : B -> C, the items in w . items(B).
struct ArrowInstance {
  ArrowQuery query;
  std::shared_ptr<const ItemSet> items;
  std::vector<Morphism> witnesses;
  std::vector<std::vector<int>> images;
  /// Distinct images only; edge_witness[e] is the first witness producing edge e.
  Hypergraph graph;
  std::vector<int> edge_witness;
};

std::shared_ptr<const ArrowInstance> build_instance(const ArrowQuery& q);

enum class SearchMode { exhaustive, backtracking };
enum class Verdict { holds, fails, inconclusive };

std::string to_string(SearchMode m);
std::string to_string(Verdict v);
SearchMode parse_mode(const std::string& s);

struct ArrowOptions {
  SearchMode mode = SearchMode::exhaustive;
  /// Canonical colorings (exhaustive) or search nodes (backtracking).
  std::uint64_t budget = std::uint64_t{1} << 25;
  int jobs = 0;
  /// Exhaustive mode with jobs != 1 uses the OpenMP kernel; it is deterministic
  /// either way. Backtracking is always single-worker.
  bool deterministic = true;
  /// Materialize the witness table when k^items <= 2^16.
  bool tabulate = false;
  PropagationFault fault = PropagationFault::none;
  /// 1-based colors; if this is a bad coloring it is returned directly.
  std::optional<std::vector<int>> seed;
};

struct WitnessTableEntry {
  std::uint64_t coloring_rank = 0;
  int color = 0;
  Morphism w;
};

inline constexpr std::uint64_t kMaxTabulatedColorings = std::uint64_t{1} << 16;

struct ArrowVerdict {
  ArrowQuery query;
  Verdict status = Verdict::inconclusive;
  SearchMode mode = SearchMode::exhaustive;
  std::optional<Coloring> bad_coloring;
  std::optional<RamseyOracle> finder;
  std::vector<WitnessTableEntry> table;
  std::uint64_t explored = 0;
  std::uint64_t budget = 0;
  std::shared_ptr<const ArrowInstance> instance;

  bool holds() const { return status == Verdict::holds; }
};

ArrowVerdict check_arrow(const ArrowQuery& q, const ArrowOptions& opts = {});

/// Oracle for a query known to hold: returns the first witness in hom order
/// whose image is monochromatic.
RamseyOracle first_witness_oracle(std::shared_ptr<const ArrowInstance> inst);

/// Finder for a 1-coloring: any witness works.
RamseyOracle trivial_oracle(const ArrowQuery& q);

std::vector<WitnessTableEntry> tabulate_witnesses(const RamseyOracle& oracle, int jobs = 0);

/// Two-coloring of hom(A, C) that uses both colors on every orbit of <alpha>
/// acting on the right. Requires alpha in Aut(A), alpha != id, and monic
/// morphisms (every orbit has |<alpha>| elements).
Coloring nonrigidity_coloring(CategoryPtr cat, const ObjectId& a, const ObjectId& c,
                              const Morphism& alpha);

/// C -> (B)^A_k and e : B1 -> B give C -> (B1)^A_k, witnesses w . e.
ArrowVerdict weaken_witness(const ArrowVerdict& v, const Morphism& e);

struct SearchStep {
  ObjectId c;
  Verdict status = Verdict::inconclusive;
  bool skipped = false;  // B does not map into C
};

struct RamseySearchResult {
  std::optional<ObjectId> c;
  std::optional<ArrowVerdict> verdict;
  int last_grade = 0;
  std::vector<SearchStep> log;
};

/// First C in `candidates` (grade ascending) with C -> (B)^A_k.
RamseySearchResult search_ramsey_object(CategoryPtr cat, const ObjectId& b, const ObjectId& a,
                                        int k, Variant variant,
                                        const std::vector<ObjectId>& candidates,
                                        const ArrowOptions& opts = {});

inline constexpr std::uint64_t kMaxProductColors = std::uint64_t{1} << 16;

using OracleFactory = std::function<std::optional<RamseyOracle>(int colors)>;

struct ProductWitness {
  Verdict status = Verdict::inconclusive;
  CategoryPtr product;
  ObjectId c;
  int t = 0;
  std::optional<RamseyOracle> oracle;
};

/// Product Ramsey construction for subobject arrows: with o1 proving
/// C1 -> (B1)^A1_k and factory(k^t) proving C2 -> (B2)^A2_{k^t}, t = |binom(C1, A1)|,
/// returns C~ = (C1, C2) and an oracle for C~ -> (B~)^A~_k in C1 x C2.
/// For k = 1 the factory is asked for a one-color oracle (see trivial_oracle).
ProductWitness product_arrow_witness(const RamseyOracle& o1, const OracleFactory& factory2,
                                     const ObjectId& a2, const ObjectId& b2, int k);

/// Factory that finds the first C with C -> (B)^A_colors among `candidates`.
OracleFactory search_factory(CategoryPtr cat, ObjectId b, ObjectId a, Variant variant,
                             std::vector<ObjectId> candidates, ArrowOptions opts);

struct ModeComparison {
  Verdict exhaustive = Verdict::inconclusive;
  Verdict backtracking = Verdict::inconclusive;
  bool agree() const { return exhaustive == backtracking; }
};

ModeComparison cross_check_modes(const ArrowQuery& q, const ArrowOptions& opts = {});

}  // namespace arrowlab

#pragma once

#include <set>
#include <string>
#include <vector>

namespace arrowlab {

/// n-ary operation on {0..q-1}; table indexed by the argument tuple read as a
/// base-q number, first argument most significant.
struct Operation {
  std::string name;
  int arity = 0;
  std::vector<int> table;
};

struct FunctionalStructure {
  int carrier = 0;
  std::vector<Operation> operations;

  int apply(const Operation& op, const std::vector<int>& args) const;
};

struct Relation {
  std::string name;
  int arity = 0;
  std::set<std::vector<int>> tuples;
};

struct RelationalStructure {
  int carrier = 0;
  std::vector<Relation> relations;
};

/// Each n-ary f becomes the (n+1)-ary relation R_f(x, y) <-> f(x) = y.
RelationalStructure relationalize(const FunctionalStructure& s);

/// For every j and every x_0..x_n: R_j(x_0..x_n) <-> f_j(x_0..x_{n-1}) = x_n.
/// On failure `reason` names the first offending tuple.
bool check_star_sentences(const FunctionalStructure& s, const RelationalStructure& r,
                          std::string* reason = nullptr);

/// Injective maps h : a -> b with h(f(x)) = f(h(x)) for every operation.
std::vector<std::vector<int>> embeddings(const FunctionalStructure& a,
                                         const FunctionalStructure& b);
/// Injective maps h : a -> b with R(x) <-> R(h(x)) for every relation.
std::vector<std::vector<int>> embeddings(const RelationalStructure& a,
                                         const RelationalStructure& b);

}  // namespace arrowlab

#pragma once

#include <compare>
#include <vector>

#include "arrowlab/category.hpp"
#include "arrowlab/functor.hpp"

namespace arrowlab {

/// A finite carrier {0..q-1} with a linear order, given as rank[x] = position
/// of x in the order. Index tuples and permutations are 1-based, tuples of
/// carrier elements 0-based.
struct OrderedCarrier {
  std::vector<int> rank;

  static OrderedCarrier natural(int size);
  int size() const { return static_cast<int>(rank.size()); }
};

/// Antilexicographic comparison of x and y after permuting coordinates by pi:
/// the last coordinate t with x[pi(t)] != y[pi(t)] decides.
std::strong_ordering antilex_compare(const OrderedCarrier& base, const std::vector<int>& pi,
                                     const std::vector<int>& x, const std::vector<int>& y);

/// All tuples of A^n in increasing order for the given pi.
std::vector<std::vector<int>> sorted_power(const OrderedCarrier& base, const std::vector<int>& pi);

struct IndexTupleMor {
  std::vector<int> tuple;  // (i_1, ..., i_m), values in 1..n
  bool embedding = false;  // {i_1, ..., i_m} = {1, ..., n}
};

/// f(x) = (x_{i_1}, ..., x_{i_m}).
std::vector<int> apply_tuple(const std::vector<int>& tuple, const std::vector<int>& x);

/// Index tuples for which j_s = pi^-1(i_{sigma(s)}) satisfies j_m = n and, for
/// s < m with j_s = k < n, {k+1..n} inside {j_{s+1}..j_m}. Lexicographic order.
std::vector<IndexTupleMor> enumerate_ordered_homs(int n, const std::vector<int>& pi, int m,
                                                  const std::vector<int>& sigma);

/// Brute force: x <=_pi y implies f(x) <=_sigma f(y), over all pairs of A^n.
bool is_ordered_hom_oracle(const OrderedCarrier& base, const std::vector<int>& tuple,
                           const std::vector<int>& pi, const std::vector<int>& sigma);

/// All permutations of {1..n} in lexicographic order.
std::vector<std::vector<int>> permutations(int n);

enum class HomSource { closed_form, brute_force };

/// Objects A^n ordered by the antilexicographic order for pi, payload
/// [n, pi(1), ..., pi(n)], grade n; morphisms are embeddings, payload the index
/// tuple. Substructure candidates that are not of this form carry the payload
/// [-1, n, rank of each tuple of A^n in base-q order].
CategoryPtr ov_fin_category(const OrderedCarrier& base, HomSource source = HomSource::closed_form);
/// OV_fin over the two-element algebra with 0 < 1.
CategoryPtr ofba_category();
/// Unordered powers A^n, payload [n], embeddings as index tuples.
CategoryPtr v_fin_category(int base_size);
/// V_fin over the two-element algebra.
CategoryPtr fba_category();

ObjectId ordered_power(int n, const std::vector<int>& pi);

/// Identity on (n, pi) labels and index-tuple payloads.
EquivalenceImpl skeleton_equivalence(CategoryPtr ofba, CategoryPtr ov);

/// Forgets the order: (n, pi) |-> n, tuples unchanged.
FunctorImpl forgetful_functor(CategoryPtr ordered, CategoryPtr plain);

/// For an embedding tuple into (m, sigma): pi ordering s by max A_s ascending,
/// A_s = {t : i_{sigma(t)} = s}.
std::vector<int> hp_decompose(const std::vector<int>& tuple, int n, const std::vector<int>& sigma);

/// For an embedding tuple A^n -> A^m and pi: sigma listing A_1, A_2, ..., A_n
/// in turn, A_s = {t : i_t = pi(s)}.
std::vector<int> reasonable_extension(const std::vector<int>& tuple, int n,
                                      const std::vector<int>& pi);

}  // namespace arrowlab

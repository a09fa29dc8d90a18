#pragma once

#include <string>

#include "arrowlab/arrow.hpp"
#include "arrowlab/functor.hpp"

namespace arrowlab {

/// From an oracle for C_D -hom-> (F(B))^F(A)_k, an oracle for
/// G(C_D) -hom-> (B)^A_k answering (i, G(w) . eta_B).
RamseyOracle adjunction_transport_hom(const AdjunctionImpl& adj, const RamseyOracle& d_oracle,
                                      const ObjectId& a, const ObjectId& b);

/// F(Aut(A)) = Aut(F(A)) as sets.
bool check_aut_condition(const FunctorImpl& f, const ObjectId& a);

struct ClassCompatibility {
  bool refused = false;
  bool compatible = false;
  std::size_t left_classes = 0;   // |hom(F(A), B) / ~F(A)|
  std::size_t right_classes = 0;  // |hom(A, G(B)) / ~A|
  std::string reason;
};

/// Phi(f / ~F(A)) = Phi(f) / ~A for every f : F(A) -> B. Refused when the
/// Aut-condition fails for A.
ClassCompatibility class_phi_compat(const AdjunctionImpl& adj, const ObjectId& a,
                                    const ObjectId& b);

/// Subobject variant of adjunction_transport_hom; requires class_phi_compat
/// for (A, C_D).
RamseyOracle adjunction_transport_obj(const AdjunctionImpl& adj, const RamseyOracle& d_oracle,
                                      const ObjectId& a, const ObjectId& b);

/// From an oracle for C -> (E(B))^E(A)_k, an oracle for H(C) -> (B)^A_k
/// answering (i, H(w) . eta_B).
RamseyOracle equivalence_transport_obj(const EquivalenceImpl& eq, const RamseyOracle& d_oracle,
                                       const ObjectId& a, const ObjectId& b);

/// Transports an ordering witness for H(A) along E. Both squares
/// V . E* = E . U and U . H* = H . V are checked at `bound`.
ObjectId ordering_transport(const EquivalenceImpl& eq_star, const EquivalenceImpl& eq,
                            const FunctorImpl& u, const FunctorImpl& v, const ObjectId& a,
                            const ObjectId& witness_b, int bound);

}  // namespace arrowlab

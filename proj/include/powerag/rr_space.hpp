#pragma once

#include <cstdint>
#include <vector>

#include "powerag/function_field.hpp"
#include "powerag/linalg.hpp"

namespace powerag {

// Divisor A = a*Pinf - sum m_i * P_i with affine, pairwise distinct P_i.
struct SpaceConstraint {
  Place place;
  int multiplicity = 1;
};

struct SpaceDescriptor {
  int pole_bound = 0;
  std::vector<SpaceConstraint> constraints;

  static SpaceDescriptor one_point(int a) { return SpaceDescriptor{a, {}}; }
  int degree() const {
    int d = pole_bound;
    for (const auto& c : constraints) d -= c.multiplicity;
    return d;
  }
};

struct RRBasis {
  SpaceDescriptor space;
  std::vector<FunctionElement> elements;
  int dim() const { return static_cast<int>(elements.size()); }
};

// Basis of L(A). Unconstrained spaces get the reduced monomials of pole order
// <= a in ascending order; constrained spaces get the canonical kernel basis
// of the vanishing-functional matrix, mapped back through the monomials.
RRBasis rr_basis(const Backend& backend, const SpaceDescriptor& space);

// Exact dimension of L(A), using closed forms where available (no
// constraints; deg A < 0; deg A >= 2g-1; uniform multiplicity over the full
// affine place set) and the functional-matrix rank otherwise.
int rr_dimension(const Backend& backend, const SpaceDescriptor& space);

// Coordinates of h in the given basis; MembershipError if h is outside the
// span.
std::vector<std::uint16_t> rr_coords(const Backend& backend, const RRBasis& basis,
                                     const FunctionElement& h);

// l(B) x l(A) matrix of the multiplication map L(A) -> L(B), h -> p*h, in the
// canonical bases. MembershipError (reporting the column) if some p*a_i
// escapes L(B).
Matrix mult_matrix(const Backend& backend, const FunctionElement& p, const SpaceDescriptor& target,
                   const SpaceDescriptor& source);
Matrix mult_matrix(const Backend& backend, const FunctionElement& p, const RRBasis& target,
                   const RRBasis& source);

}  // namespace powerag

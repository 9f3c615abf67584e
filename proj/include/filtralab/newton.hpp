#pragma once

#include <vector>

#include "filtralab/ideal.hpp"

namespace filtralab {

// Membership of a lattice point in the scaled Newton polyhedron n*NP(I),
// NP(I) = conv(generator exponents) + nonnegative orthant. Decided by exact
// rational feasibility of: lambda >= 0, sum lambda = n, sum lambda_g * g <= a.
// Requires an m-primary ideal in a polynomial ambient.
bool newton_membership(const ExponentVector& a, const MonomialIdeal& I, int n);

// Same for a Minkowski sum n_1*NP(I_1) + ... + n_s*NP(I_s); this is the
// Newton polyhedron of the product ideal I_1^{n_1}...I_s^{n_s}.
bool newton_membership_sum(const ExponentVector& a,
                           const std::vector<const MonomialIdeal*>& ideals,
                           const std::vector<int>& multipliers);

// Integral closure of I^n: the monomial ideal of lattice points of n*NP(I).
MonomialIdeal integral_closure_power(const MonomialIdeal& I, int n);

inline MonomialIdeal integral_closure(const MonomialIdeal& I) {
  return integral_closure_power(I, 1);
}

// Integral closure of the product I_1^{n_1}...I_s^{n_s} without expanding
// the product's generator set into the LP.
MonomialIdeal integral_closure_product(const std::vector<MonomialIdeal>& base,
                                       const std::vector<int>& multipliers);

} // namespace filtralab

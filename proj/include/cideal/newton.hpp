#pragma once

#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "cideal/monomial.hpp"

namespace cideal {

using Rat = boost::multiprecision::cpp_rational;

/// Membership of v in n * NP(I), where NP(I) = conv(generator exponents) +
/// the non-negative orthant.  Decided by exact rational linear programming:
/// feasibility of  sum lambda_e * e <= v,  sum lambda_e = n,  lambda >= 0.
bool np_member(const MonomialIdeal& I, const std::vector<int>& v, int n = 1);

/// Integral closure: minimal generators are the divisibility-minimal lattice
/// points of NP(I).  The search box [0, componentwise max of generator
/// exponents] suffices: a coordinate exceeding every generator's coordinate
/// admits a unit decrement staying in NP.
MonomialIdeal closure(const MonomialIdeal& I);

/// closure(I^n) via membership in the scaled polyhedron n * NP(I).
MonomialIdeal closure_power(const MonomialIdeal& I, int n);

bool is_integrally_closed(const MonomialIdeal& I);

/// I * J = closure(I J).
MonomialIdeal star_product(const MonomialIdeal& I, const MonomialIdeal& J);

struct MiClosedness {
  bool closed;
  std::optional<Monomial> witness; // canonically least element of closure(MI) \ MI
};

/// Direct test of the integral closedness of M*I, independent of any
/// generator-count criterion.
MiClosedness mi_closedness(const MonomialIdeal& I);

} // namespace cideal

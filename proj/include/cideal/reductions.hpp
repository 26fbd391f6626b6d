#pragma once

#include "cideal/poly.hpp"

namespace cideal {

struct Lemma61Record {
  Int lhs;       // l((J + closure(I^2)) / J)
  Int rhs;       // sum over nodes of binomial(order, 3)
  bool cm_iff;   // lhs == rhs
  bool low_order_ok;  // order <= 2 implies cm_iff
  bool high_order_ok; // order >= 3 implies r_J >= 2
};

struct ReductionReport {
  int n_max = 0;
  std::vector<int> failing_n;   // n with J closure(I^{n-1}) != closure(I^n)
  int r_J = 0;                  // largest failing n (0 when none fail)
  bool is_reduction = false;    // equality holds at the top of the range
  bool inconclusive = false;    // still unequal at n_max: never reported false
  std::optional<Lemma61Record> lemma61;
};

/// Tests J closure(I^n) = closure(I^{n+1}) for n < n_max by Groebner
/// membership of each generator of closure(I^{n+1}); the reverse inclusion
/// holds automatically once J is inside closure(I).
ReductionReport is_reduction(const PolynomialIdeal& J, const MonomialIdeal& I,
                             int n_max = 6);

/// Executable form of the dimension-three depth criteria.  Verifies the
/// scaled length identity l(R/closure(I^n)) = sum binomial(n o_S + 2, 3)
/// for n <= n_max first and raises on failure.
ReductionReport lemma61_checks(const MonomialIdeal& I, const PolynomialIdeal& J,
                               int n_max = 6);

/// Convenience search for a d-generated reduction among random small
/// integer combinations of the closure's generators.  Deterministic for a
/// fixed seed; returns nothing after `attempts` failures.
std::optional<PolynomialIdeal> find_reduction(const MonomialIdeal& I,
                                              unsigned seed, int attempts = 50,
                                              int n_max = 4);

} // namespace cideal

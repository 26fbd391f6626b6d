#pragma once

#include <map>

#include "cideal/blowup.hpp"
#include "cideal/newton.hpp"

namespace cideal {

struct HDNodeTerm {
  std::vector<int> path;
  int order = 0;
  Int term; // binomial(order + d - 1, d)
};

struct HDReport {
  Int colength_closure;
  Int hd_sum;
  Int defect; // hd_sum - colength_closure; 0 for monomial input
  std::vector<HDNodeTerm> per_node;
};

/// Sum over nodes of binomial(order + d - 1, d).
Int hd_sum(const Constellation& c, int d);

/// Length identity for a finitely supported M-primary monomial ideal:
/// computes l(R/closure(I)) and the point-basis sum and reports the
/// difference.  The difference is expected to vanish; a non-zero value is a
/// failed identity and is asserted at test level, not here.
HDReport hd_check(const MonomialIdeal& I);

/// Defect assembly from externally supplied data, for ideals outside the
/// monomial automation: the root contributes binomial(root_order + d - 1, d)
/// and each entry of `transform_lengths` is the already-summed length
/// contribution of one first-quadratic-transform subtree.
HDReport defect_report(int dim, const Int& colength_of_ideal, int root_order,
                       const std::vector<Int>& transform_lengths);

struct HilbertTable {
  std::map<int, Int> samples;       // n -> l(R/closure(I^n))
  std::vector<Rat> fitted;          // coefficient of n^k at index k, degree d
  int fit_valid_from = 0;           // least n with exact agreement onward
  Int multiplicity;                 // d! * leading coefficient
};

Rat eval_poly(const std::vector<Rat>& coeffs, const Int& n);

/// Samples l(R/closure(I^n)) for n = 0..n_max and fits the exact Hilbert
/// polynomial through the last d+1 samples.  Requires n_max >= d + 2; a
/// fitted degree below d raises an error rather than silently fitting.
HilbertTable hilbert_table(const MonomialIdeal& I, int n_max = -1);

} // namespace cideal

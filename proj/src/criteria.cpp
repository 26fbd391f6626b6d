#include "cideal/criteria.hpp"

namespace cideal {

namespace {

Int ipow(int b, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

CriteriaReport base_report(const MonomialIdeal& I) {
  const int d = I.dim();
  if (!is_mprimary(I)) throw NotMPrimary();
  CriteriaReport r;
  MonomialIdeal C = closure(I);
  r.input_was_closed = (C == I);
  if (!r.input_was_closed)
    r.hypothesis_notes.push_back("input was not integrally closed; bounds computed for its closure");
  r.o = order(C);
  r.mu_closure = mu(C);
  r.lower = binomial(r.o + d - 1, d - 1);
  r.upper = ipow(r.o, d - 1) + d - 1;
  Int len = colength(C);
  for (int i = 1; i <= d - 1; ++i)
    r.upper_i.push_back(ipow(r.o, d - i) + (d - i) + (i - 1) * len);
  r.finitely_supported = is_finitely_supported(C);
  if (!r.finitely_supported)
    r.hypothesis_notes.push_back("not finitely supported; upper bound inapplicable");
  return r;
}

} // namespace

CriteriaReport generator_bounds(const MonomialIdeal& I) {
  return base_report(I);
}

CriteriaReport mi_criterion(const MonomialIdeal& I) {
  CriteriaReport r = base_report(I);
  const int d = I.dim();
  MonomialIdeal C = r.input_was_closed ? I : closure(I);
  MiClosedness mc = mi_closedness(C);
  r.mi_closed = mc.closed;
  r.mi_witness = mc.witness;
  r.binding = true;
  if (d < 3) {
    r.binding = false;
    r.hypothesis_notes.push_back("criterion requires dimension at least 3");
  }
  if (!r.input_was_closed) {
    r.binding = false;
    r.hypothesis_notes.push_back("criterion applies to the closure, input was open");
  }
  if (!r.finitely_supported) r.binding = false;
  r.criterion_consistent = (r.mi_closed == (Int(r.mu_closure) == r.lower));
  return r;
}

Int length_drop(const MonomialIdeal& I) {
  if (!is_mprimary(I)) throw NotMPrimary();
  MonomialIdeal C = closure(I);
  MonomialIdeal MC = closure(product(MonomialIdeal::maximal(I.dim()), C));
  return colength(MC) - colength(C);
}

} // namespace cideal

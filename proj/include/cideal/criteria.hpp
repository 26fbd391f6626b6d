#pragma once

#include "cideal/mult.hpp"

namespace cideal {

struct CriteriaReport {
  int o = 0;                      // order of closure(I)
  int mu_closure = 0;             // mu(closure(I))
  Int lower;                      // binomial(o + d - 1, d - 1)
  Int upper;                      // o^(d-1) + d - 1
  std::vector<Int> upper_i;       // o^(d-i) + d - i + (i-1) l(R/closure(I)), i = 1..d-1
  bool finitely_supported = false;
  bool input_was_closed = true;
  bool mi_closed = false;
  std::optional<Monomial> mi_witness;
  bool criterion_consistent = true;   // mi_closed <=> mu == lower, when binding
  bool binding = true;                // all hypotheses of the criterion hold
  std::vector<std::string> hypothesis_notes;
};

/// Generator-count bounds for closure(I).  When I is not finitely supported
/// the bounds are reported as inapplicable instead of raising.
CriteriaReport generator_bounds(const MonomialIdeal& I);

/// Evaluates both sides of the MI-closedness criterion (direct closure test
/// against mu = binomial(o + d - 1, d - 1)) and the biconditional.  Runs
/// even when hypotheses fail, labeled non-binding.
CriteriaReport mi_criterion(const MonomialIdeal& I);

/// l(R/closure(M closure(I))) - l(R/closure(I)).
Int length_drop(const MonomialIdeal& I);

} // namespace cideal

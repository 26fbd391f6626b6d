#pragma once

#include <map>
#include <string>

#include "cideal/hd.hpp"

namespace cideal {

enum class MultSource { PointBasis, Fitting, Both };

struct MultReport {
  Int e = 0;                                  // multiplicity (g = 1)
  std::map<std::vector<int>, Int> mixed;      // multi-index (sum = d) -> e_{i_1..i_g}
  MultSource source = MultSource::Fitting;
  std::vector<std::string> discrepancies;     // must stay empty
  std::vector<std::string> notices;           // e.g. fitting-only downgrade
};

/// e(I): point-basis formula sum o(I^S)^d when finitely supported,
/// cross-checked against d! times the leading Hilbert coefficient.
Int multiplicity(const MonomialIdeal& I);

/// Mixed multiplicities of g M-primary monomial ideals, multi-indices in
/// colexicographic order.  Point-basis path sum_S prod o(I_j^S)^{i_j}
/// (0^0 = 1) when all are finitely supported; exact multivariate polynomial
/// fitting of l(R/closure(I_1^{n_1}...I_g^{n_g})) always.
MultReport mixed_multiplicities(const std::vector<MonomialIdeal>& ideals);

/// Numerator coefficients of sum_n mu(I^n) t^n written over (1-t)^d.
std::vector<Int> fiber_numerator(const MonomialIdeal& I, int n_max = 8);

/// All multi-indices of length g with given sum, colexicographic.
std::vector<std::vector<int>> multi_indices(int g, int sum);

} // namespace cideal

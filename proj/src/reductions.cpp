#include "cideal/reductions.hpp"

#include <random>

#include "cideal/hd.hpp"

namespace cideal {

namespace {

// Membership of a polynomial in a monomial ideal is term-wise.
bool poly_in_monomial_ideal(const Polynomial& f, const MonomialIdeal& I) {
  for (const auto& [e, c] : f.terms())
    if (!I.contains(Monomial(e))) return false;
  return true;
}

PolynomialIdeal scale_by(const PolynomialIdeal& J, const MonomialIdeal& C) {
  return ideal_product(J, PolynomialIdeal::from_monomial_ideal(C));
}

} // namespace

ReductionReport is_reduction(const PolynomialIdeal& J, const MonomialIdeal& I,
                             int n_max) {
  const int d = I.dim();
  if (J.dim() != d) throw DimensionMismatch();
  if (static_cast<int>(J.gens().size()) != d) throw WrongGeneratorCount();
  if (I.is_unit()) throw UnitIdeal();
  if (!is_mprimary(I)) throw NotMPrimary();

  std::vector<MonomialIdeal> C; // C[n] = closure(I^n)
  C.push_back(MonomialIdeal::unit(d));
  for (int n = 1; n <= n_max; ++n) C.push_back(closure_power(I, n));

  for (const auto& g : J.gens())
    if (!poly_in_monomial_ideal(g, C[1])) throw NotContained();

  ReductionReport rep;
  rep.n_max = n_max;
  for (int n = 1; n <= n_max; ++n) {
    PolynomialIdeal JC = (n == 1) ? J : scale_by(J, C[n - 1]);
    bool equal = true;
    for (const auto& m : C[n].gens()) {
      if (!member(Polynomial::from_monomial(m), JC)) { equal = false; break; }
    }
    if (!equal) rep.failing_n.push_back(n);
  }
  rep.r_J = rep.failing_n.empty() ? 0 : rep.failing_n.back();
  rep.inconclusive = !rep.failing_n.empty() && rep.failing_n.back() == n_max;
  rep.is_reduction = !rep.inconclusive;
  return rep;
}

ReductionReport lemma61_checks(const MonomialIdeal& I, const PolynomialIdeal& J,
                               int n_max) {
  const int d = I.dim();
  if (d != 3)
    throw Error(ErrorKind::Usage, "the depth criteria are specific to dimension 3");
  Constellation c = constellation(I); // propagates NotFinitelySupported
  auto basis = point_basis(c);
  // hypothesis: the scaled length identity at every sampled power
  for (int n = 1; n <= n_max; ++n) {
    Int lhs = colength(closure_power(I, n));
    Int rhs = 0;
    for (int o : basis) rhs += binomial(Int(n) * o + 2, 3);
    if (lhs != rhs)
      throw Error(ErrorKind::HypothesisViolation,
                  "scaled length identity fails at n = " + std::to_string(n));
  }

  ReductionReport rep = is_reduction(J, I, n_max);
  Lemma61Record rec;
  Int colen_J = gb_colength(J);
  std::vector<Polynomial> ext = J.gens();
  MonomialIdeal C2 = closure_power(I, 2);
  for (const auto& m : C2.gens())
    ext.push_back(Polynomial::from_monomial(m));
  Int colen_JI2 = gb_colength(PolynomialIdeal(d, std::move(ext)));
  rec.lhs = colen_J - colen_JI2;
  rec.rhs = 0;
  for (int o : basis) rec.rhs += binomial(o, 3);
  rec.cm_iff = (rec.lhs == rec.rhs);
  int o = order(I);
  rec.low_order_ok = (o > 2) || rec.cm_iff;
  rec.high_order_ok = (o < 3) || rep.inconclusive || rep.r_J >= 2;
  rep.lemma61 = rec;
  return rep;
}

std::optional<PolynomialIdeal> find_reduction(const MonomialIdeal& I,
                                              unsigned seed, int attempts,
                                              int n_max) {
  const int d = I.dim();
  MonomialIdeal C = closure(I);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int a = 0; a < attempts; ++a) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < d; ++k) {
      Polynomial p(d);
      for (const auto& g : C.gens()) p.add_term(g.e, coeff(rng));
      if (p.is_zero()) p = Polynomial::from_monomial(C.gens()[k % C.gens().size()]);
      gens.push_back(std::move(p));
    }
    PolynomialIdeal J(d, std::move(gens));
    try {
      ReductionReport rep = is_reduction(J, I, n_max);
      if (rep.is_reduction) return J;
    } catch (const Error&) {
      // singular candidate; try again
    }
  }
  return std::nullopt;
}

} // namespace cideal

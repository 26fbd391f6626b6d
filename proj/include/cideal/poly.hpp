#pragma once

#include <map>
#include <optional>

#include "cideal/newton.hpp"

namespace cideal {

/// Strict less-than for degrevlex: degree first, ties by the last differing
/// exponent (larger exponent there sorts smaller).  Consistent with the
/// canonical monomial order.
struct DegRevLexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Sparse polynomial with exact rational coefficients over a fixed number
/// of variables.  The zero polynomial is the empty term map.
class Polynomial {
public:
  using TermMap = std::map<std::vector<int>, Rat, DegRevLexLess>;

  explicit Polynomial(int dim) : dim_(dim) {}
  static Polynomial term(int dim, std::vector<int> exps, Rat c);
  static Polynomial from_monomial(const Monomial& m);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  const std::vector<int>& leading_exponent() const;
  const Rat& leading_coeff() const;
  int max_degree() const; // 0 for the zero polynomial
  int origin_order() const; // min term degree; throws on zero

  void add_term(const std::vector<int>& exps, const Rat& c);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial times_term(const std::vector<int>& exps, const Rat& c) const;
  Polynomial monic() const;
  bool operator==(const Polynomial& o) const {
    return dim_ == o.dim_ && terms_ == o.terms_;
  }

private:
  int dim_;
  TermMap terms_;
};

class PolynomialIdeal {
public:
  PolynomialIdeal(int dim, std::vector<Polynomial> gens);
  static PolynomialIdeal from_monomial_ideal(const MonomialIdeal& I);

  int dim() const { return dim_; }
  const std::vector<Polynomial>& gens() const { return gens_; }

  /// Reduced degrevlex Groebner basis (cached).  Deterministic: S-pairs by
  /// lcm degree, ties by creation index.  Throws DegreeBlowup beyond the
  /// guard (total degree, default 60).
  const std::vector<Polynomial>& groebner(int degree_guard = 60) const;

private:
  int dim_;
  std::vector<Polynomial> gens_;
  mutable std::optional<std::vector<Polynomial>> gb_;
};

/// Full normal form of f modulo `basis` (every term reduced).
Polynomial normal_form(Polynomial f, const std::vector<Polynomial>& basis,
                       int degree_guard = 60);

bool member(const Polynomial& f, const PolynomialIdeal& I);

/// Count of standard monomials; throws NotZeroDimensional when the
/// leading-term ideal misses a pure power of some variable.
Int gb_colength(const PolynomialIdeal& I);

MonomialIdeal leading_term_ideal(const PolynomialIdeal& I);

PolynomialIdeal ideal_product(const PolynomialIdeal& I, const PolynomialIdeal& J);

/// Transform in the chart of variable `chart`: substitute x_j -> x_i x_j
/// (j != chart) and divide every generator by x_i^o, o = min generator
/// order at the origin.  Chart origins only.
PolynomialIdeal poly_transform(const PolynomialIdeal& I, int chart);

int ideal_order(const PolynomialIdeal& I);

} // namespace cideal

#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_int/serialize.hpp>

#include "cideal/errors.hpp"

namespace cideal {

using Int = boost::multiprecision::cpp_int;

Int binomial(const Int& a, const Int& b); // 0 when a < b or b < 0

/// A monomial x^e in a fixed number of variables; exponents are small
/// non-negative integers, all counting is arbitrary precision.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

  int dim() const { return static_cast<int>(e.size()); }
  int degree() const;
  bool is_one() const { return degree() == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial& other) const { return e == other.e; }
  bool operator!=(const Monomial& other) const { return e != other.e; }
};

/// Canonical order: total degree first, then reverse-lexicographic on the
/// exponent vector (the last differing exponent decides, larger exponent
/// sorts earlier).
bool canonical_less(const Monomial& a, const Monomial& b);

/// A monomial ideal given by its unique minimal generating set, sorted in
/// canonical order.  The unit ideal is representable only as {1}.
class MonomialIdeal {
public:
  /// Minimalize and canonically sort `gens`.  Throws EmptyGeneratorSet /
  /// DimensionMismatch.
  static MonomialIdeal make(std::vector<Monomial> gens, int dim);
  static MonomialIdeal unit(int dim);
  static MonomialIdeal maximal(int dim); // M = (x_1, ..., x_d)

  int dim() const { return dim_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const; // other subseteq this

  bool operator==(const MonomialIdeal& o) const {
    return dim_ == o.dim_ && gens_ == o.gens_;
  }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

private:
  MonomialIdeal(std::vector<Monomial> gens, int dim)
      : gens_(std::move(gens)), dim_(dim) {}
  std::vector<Monomial> gens_;
  int dim_;
};

/// o(I) = max{n : I subseteq M^n} = minimum generator degree.
/// Throws UnitIdeal on the unit ideal.
int order(const MonomialIdeal& I);

int mu(const MonomialIdeal& I);

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal power(const MonomialIdeal& I, int n); // n >= 0; power 0 is the unit ideal

/// True iff every variable has a pure power among the generators.
bool is_mprimary(const MonomialIdeal& I);

/// Pure-power exponent per axis; throws NotMPrimary.
std::vector<int> pure_power_exponents(const MonomialIdeal& I);

/// Number of standard monomials, by enumerating the box bounded by the
/// pure-power exponents.  Throws NotMPrimary, BoxTooLarge.
Int colength(const MonomialIdeal& I);

std::string to_string(const Monomial& m, const std::vector<std::string>& vars);
std::string to_string(const MonomialIdeal& I, const std::vector<std::string>& vars);
std::vector<std::string> default_vars(int dim); // x,y,z for d<=3 else x1..xd

} // namespace cideal

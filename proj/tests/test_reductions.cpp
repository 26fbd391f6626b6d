#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cideal/fixtures.hpp"
#include "cideal/reductions.hpp"

using namespace cideal;

namespace {

Polynomial P(const std::string& s, int d = 3) {
  return parse_polynomial(s, default_vars(d));
}

} // namespace

TEST_CASE("pure powers reduce a power of the maximal ideal") {
  auto I = power(MonomialIdeal::maximal(2), 2);
  PolynomialIdeal J(2, {P("x^2", 2), P("y^2", 2)});
  ReductionReport r = is_reduction(J, I, 4);
  CHECK(r.is_reduction);
  CHECK_FALSE(r.inconclusive);
  // J itself is smaller than M^2, so only n = 1 fails
  CHECK(r.failing_n == std::vector<int>{1});
  CHECK(r.r_J == 1);
}

TEST_CASE("the ideal is a reduction of itself with reduction number zero") {
  auto M = MonomialIdeal::maximal(2);
  PolynomialIdeal J(2, {P("x", 2), P("y", 2)});
  ReductionReport r = is_reduction(J, M, 3);
  CHECK(r.is_reduction);
  CHECK(r.r_J == 0);
  CHECK(r.failing_n.empty());
}

TEST_CASE("a too-small candidate stays inconclusive, never falsely accepted") {
  // (x^2, y^3) cannot reduce M^2: its multiplicity is too big
  auto I = power(MonomialIdeal::maximal(2), 2);
  PolynomialIdeal J(2, {P("x^2", 2), P("y^3", 2)});
  ReductionReport r = is_reduction(J, I, 4);
  CHECK_FALSE(r.is_reduction);
  CHECK(r.inconclusive);
}

TEST_CASE("candidate shape is validated") {
  auto I = power(MonomialIdeal::maximal(2), 2);
  CHECK_THROWS_AS(is_reduction(PolynomialIdeal(2, {P("x^2", 2)}), I, 3),
                  WrongGeneratorCount);
  CHECK_THROWS_AS(
      is_reduction(PolynomialIdeal(2, {P("x", 2), P("y^2", 2)}), I, 3),
      NotContained);
}

TEST_CASE("reduction number of the worked example is two") {
  ReductionReport r = is_reduction(fixtures::ex71_J(), fixtures::ex71(), 3);
  CHECK(r.is_reduction);
  CHECK(r.r_J == 2);
  CHECK(r.failing_n == std::vector<int>{1, 2});
}

TEST_CASE("depth criteria record for a square power") {
  // M^2 in three variables with the pure-power reduction: both sides of the
  // length identity vanish because the three generic quadrics already
  // contain M^4
  auto I = power(MonomialIdeal::maximal(3), 2);
  PolynomialIdeal J(3, {P("x^2"), P("y^2"), P("z^2")});
  ReductionReport r = lemma61_checks(I, J, 3);
  CHECK(r.is_reduction);
  CHECK(r.r_J == 1);
  REQUIRE(r.lemma61.has_value());
  CHECK(r.lemma61->lhs == 0);
  CHECK(r.lemma61->rhs == 0);
  CHECK(r.lemma61->cm_iff);
  CHECK(r.lemma61->low_order_ok);
  CHECK(r.lemma61->high_order_ok);
}

TEST_CASE("depth criteria on the worked example") {
  ReductionReport r = lemma61_checks(fixtures::ex71(), fixtures::ex71_J(), 3);
  REQUIRE(r.lemma61.has_value());
  CHECK(r.lemma61->lhs == 1);
  CHECK(r.lemma61->rhs == 1);
  CHECK(r.lemma61->high_order_ok);
}

TEST_CASE("depth criteria are dimension-three only") {
  auto I = power(MonomialIdeal::maximal(2), 2);
  PolynomialIdeal J(2, {P("x^2", 2), P("y^2", 2)});
  CHECK_THROWS_AS(lemma61_checks(I, J, 3), Error);
}

TEST_CASE("random search finds a reduction of a power of the maximal ideal") {
  auto I = power(MonomialIdeal::maximal(2), 2);
  auto J = find_reduction(I, 42, 50, 3);
  REQUIRE(J.has_value());
  ReductionReport r = is_reduction(*J, I, 3);
  CHECK(r.is_reduction);
}

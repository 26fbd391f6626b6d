#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cideal/monomial.hpp"

using namespace cideal;

namespace {

// Inclusion-exclusion oracle for the staircase count: the union of the
// shifted orthants inside the bounding box, measured subset by subset.
// Exponential in the generator count, so only used for small inputs.
Int colength_oracle(const MonomialIdeal& I) {
  auto caps = pure_power_exponents(I);
  const int d = I.dim();
  const size_t g = I.gens().size();
  Int box = 1;
  for (int c : caps) box *= c;
  Int inside = 0;
  for (size_t mask = 1; mask < (size_t(1) << g); ++mask) {
    std::vector<int> lcm(d, 0);
    int bits = 0;
    for (size_t j = 0; j < g; ++j) {
      if (!(mask >> j & 1)) continue;
      ++bits;
      for (int i = 0; i < d; ++i) lcm[i] = std::max(lcm[i], I.gens()[j].e[i]);
    }
    Int vol = 1;
    for (int i = 0; i < d; ++i) vol *= std::max(0, caps[i] - lcm[i]);
    if (bits % 2) inside += vol;
    else inside -= vol;
  }
  return box - inside;
}

MonomialIdeal random_mprimary(std::mt19937& rng, int d, int max_e, int extra) {
  std::uniform_int_distribution<int> E(1, max_e), E0(0, max_e);
  std::vector<Monomial> gens;
  for (int i = 0; i < d; ++i) {
    std::vector<int> e(d, 0);
    e[i] = E(rng);
    gens.emplace_back(e);
  }
  for (int j = 0; j < extra; ++j) {
    std::vector<int> e(d);
    int s = 0;
    for (int i = 0; i < d; ++i) s += e[i] = E0(rng);
    if (s == 0) continue;
    gens.emplace_back(e);
  }
  return MonomialIdeal::make(std::move(gens), d);
}

} // namespace

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(2, 3) == 0);
  CHECK(binomial(-1, 2) == 0);
  CHECK(binomial(60, 30) == Int("118264581564861424"));
}

TEST_CASE("minimalization and canonical order") {
  // x^2 absorbs x^3, x^2*y
  auto I = MonomialIdeal::make(
      {Monomial({3, 0}), Monomial({2, 0}), Monomial({2, 1}), Monomial({0, 2})}, 2);
  REQUIRE(I.gens().size() == 2);
  CHECK(I.gens()[0] == Monomial({0, 2}));
  CHECK(I.gens()[1] == Monomial({2, 0}));
  CHECK(I.contains(Monomial({5, 7})));
  CHECK_FALSE(I.contains(Monomial({1, 1})));
}

TEST_CASE("canonical order sorts by degree then reverse-lex") {
  CHECK(canonical_less(Monomial({0, 2}), Monomial({3, 0})));   // degree wins
  CHECK(canonical_less(Monomial({0, 0, 3}), Monomial({3, 0, 0}))); // z^3 first
  CHECK(canonical_less(Monomial({1, 0, 2}), Monomial({0, 2, 1})));
}

TEST_CASE("order and mu") {
  auto I = MonomialIdeal::make({Monomial({2, 0}), Monomial({1, 1}), Monomial({0, 3})}, 2);
  CHECK(order(I) == 2);
  CHECK(mu(I) == 3);
  CHECK_THROWS_AS(order(MonomialIdeal::unit(2)), UnitIdeal);
}

TEST_CASE("product and power") {
  auto M = MonomialIdeal::maximal(3);
  CHECK(power(M, 0).is_unit());
  CHECK(power(M, 3) == product(M, product(M, M)));
  CHECK(mu(power(M, 4)) == 15); // binomial(6, 2)
  auto I = MonomialIdeal::make({Monomial({2, 0}), Monomial({0, 2})}, 2);
  auto I2 = power(I, 2);
  CHECK(I2.gens().size() == 3); // x^4, x^2 y^2, y^4
}

TEST_CASE("m-primary detection") {
  CHECK(is_mprimary(power(MonomialIdeal::maximal(4), 3)));
  auto I = MonomialIdeal::make({Monomial({1, 0, 0}), Monomial({0, 1, 0})}, 3);
  CHECK_FALSE(is_mprimary(I));
  CHECK_THROWS_AS(colength(I), NotMPrimary);
}

TEST_CASE("colength of maximal-ideal powers") {
  for (int d = 2; d <= 4; ++d)
    for (int n = 1; n <= 5; ++n)
      CHECK(colength(power(MonomialIdeal::maximal(d), n)) == binomial(n + d - 1, d));
}

TEST_CASE("colength matches the inclusion-exclusion oracle") {
  std::mt19937 rng(11);
  for (int it = 0; it < 120; ++it) {
    int d = 2 + it % 3;
    MonomialIdeal I = random_mprimary(rng, d, 5, 3);
    if (I.is_unit() || I.gens().size() > 8) continue;
    CHECK(colength(I) == colength_oracle(I));
  }
}

TEST_CASE("containment between ideals") {
  auto M = MonomialIdeal::maximal(2);
  CHECK(M.contains(power(M, 2)));
  CHECK_FALSE(power(M, 2).contains(M));
}

TEST_CASE("printing") {
  auto I = MonomialIdeal::make({Monomial({2, 1, 0}), Monomial({0, 0, 3})}, 3);
  CHECK(to_string(I.gens()[0], default_vars(3)) == "z^3");
  CHECK(to_string(I.gens()[1], default_vars(3)) == "x^2*y");
  CHECK(default_vars(4) == std::vector<std::string>{"x1", "x2", "x3", "x4"});
}

TEST_CASE("constructor guards") {
  CHECK_THROWS_AS(MonomialIdeal::make({}, 2), EmptyGeneratorSet);
  CHECK_THROWS_AS(MonomialIdeal::make({Monomial({1, 2, 3})}, 2), DimensionMismatch);
}

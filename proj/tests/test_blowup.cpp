#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cideal/blowup.hpp"
#include "cideal/fixtures.hpp"

using namespace cideal;

TEST_CASE("chart transform, hand-traced") {
  // (x^2, y^3) in chart x: x^2 -> 1? no: deg 2 - o 2 = 0 at chart, so unit
  auto I = MonomialIdeal::make({Monomial({2, 0}), Monomial({0, 3})}, 2);
  CHECK(chart_transform(I, 0).is_unit());
  // chart y: x^2 -> x^2, y^3 -> y
  auto T = chart_transform(I, 1);
  REQUIRE(T.gens().size() == 2);
  CHECK(T.gens()[0] == Monomial({0, 1}));
  CHECK(T.gens()[1] == Monomial({2, 0}));
}

TEST_CASE("transform drops the order times the exceptional power") {
  MonomialIdeal I = fixtures::ex71();
  // chart x: hand-traced to (x, z, y^3)
  auto Tx = chart_transform(I, 0);
  CHECK(Tx == MonomialIdeal::make(
                  {Monomial({1, 0, 0}), Monomial({0, 0, 1}), Monomial({0, 3, 0})}, 3));
  // chart y carries no base point: y^3 has pure chart degree
  CHECK(chart_transform(I, 1).is_unit());
}

TEST_CASE("constellation of a maximal-ideal power is a single node") {
  for (int d = 2; d <= 4; ++d)
    for (int n = 1; n <= 4; ++n) {
      Constellation c = constellation(power(MonomialIdeal::maximal(d), n));
      CHECK(c.node_count == 1);
      CHECK(c.root.order == n);
      CHECK(c.root.children.empty());
    }
}

TEST_CASE("point basis of the eleven-generator example") {
  Constellation c = constellation(fixtures::ex71());
  CHECK(c.node_count == 7);
  CHECK(point_basis(c) == std::vector<int>{3, 2, 1, 1, 1, 1, 1});
}

TEST_CASE("chain ideal recurses along one chart") {
  // (x, y^k) blows up to (x, y^{k-1}); depth k
  auto I = MonomialIdeal::make({Monomial({1, 0}), Monomial({0, 6})}, 2);
  Constellation c = constellation(I);
  CHECK(c.node_count == 6);
  CHECK(point_basis(c) == std::vector<int>(6, 1));
  CHECK_THROWS_AS(constellation(I, 3), DepthExceeded);
}

TEST_CASE("positive-dimensional cosupport is rejected with a witness") {
  MonomialIdeal I1 = fixtures::ex74_i1();
  // chart y transform of (x, y^2, yz, z^2) is (x, y): no pure power of z
  auto T = chart_transform(I1, 1);
  CHECK(T == MonomialIdeal::make({Monomial({1, 0, 0}), Monomial({0, 1, 0})}, 3));
  try {
    constellation(I1);
    FAIL("expected NotFinitelySupported");
  } catch (const NotFinitelySupported& e) {
    CHECK(e.path == std::vector<int>{1});
    CHECK(e.direction == 2);
  }
  CHECK_FALSE(is_finitely_supported(I1));
  CHECK_FALSE(is_finitely_supported(fixtures::ex74_product()));
  CHECK(is_finitely_supported(fixtures::ex71()));
}

TEST_CASE("joint constellation tracks per-ideal orders") {
  auto M = MonomialIdeal::maximal(2);
  JointNode root = joint_constellation({M, power(M, 2)});
  CHECK(root.orders == std::vector<int>{1, 2});
  CHECK(root.children.empty());

  // (x, y^3) against M: the chain continues for the first ideal only
  auto I = MonomialIdeal::make({Monomial({1, 0}), Monomial({0, 3})}, 2);
  JointNode r2 = joint_constellation({I, M});
  CHECK(r2.orders == std::vector<int>{1, 1});
  REQUIRE(r2.children.size() == 1);
  CHECK(r2.children[0].orders == std::vector<int>{1, 0});
}

TEST_CASE("hypothesis guards") {
  auto I = MonomialIdeal::make({Monomial({1, 0, 0})}, 3);
  CHECK_THROWS_AS(constellation(I), NotMPrimary);
  CHECK_THROWS_AS(chart_transform(MonomialIdeal::maximal(2), 5), Error);
}

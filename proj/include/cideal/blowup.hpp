#pragma once

#include <vector>

#include "cideal/monomial.hpp"

namespace cideal {

/// Transform of a monomial ideal in the chart of variable `chart`
/// (0-based): generator a maps to the exponent vector with entry
/// deg(a) - o(I) at `chart` and a_j elsewhere.  The unit ideal is a valid
/// result and signals that the chart carries no base point.
MonomialIdeal chart_transform(const MonomialIdeal& I, int chart);

struct ConstellationNode {
  std::vector<int> path; // chart indices from the root (empty at root)
  int order = 0;
  int residue_degree = 1; // all base points here are rational
  MonomialIdeal local = MonomialIdeal::unit(0);
  std::vector<ConstellationNode> children;
};

struct Constellation {
  ConstellationNode root;
  int node_count = 0;
};

/// The tree of infinitely near base points of an M-primary monomial ideal.
/// At each node and chart the transform is computed; a proper transform
/// whose cosupport on the exceptional divisor is not concentrated at the
/// chart origin raises NotFinitelySupported.  For monomial ideals the base
/// points on an exceptional divisor are torus-fixed, i.e. chart origins, so
/// the recursion over charts sees every base point.
Constellation constellation(const MonomialIdeal& I, int max_depth = 64);

/// Node orders, sorted descending.
std::vector<int> point_basis(const Constellation& c);

bool is_finitely_supported(const MonomialIdeal& I);

/// Union constellation of several ideals: a node is kept when at least one
/// ideal still has positive order there.  `orders[j]` is o(I_j^S) at the
/// node (0 once the transform of I_j has become the unit ideal).
struct JointNode {
  std::vector<int> path;
  std::vector<int> orders;
  std::vector<MonomialIdeal> locals;
  std::vector<JointNode> children;
};

JointNode joint_constellation(const std::vector<MonomialIdeal>& ideals,
                              int max_depth = 64);

} // namespace cideal

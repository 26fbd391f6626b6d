#include "cideal/blowup.hpp"

#include <algorithm>

namespace cideal {

MonomialIdeal chart_transform(const MonomialIdeal& I, int chart) {
  if (chart < 0 || chart >= I.dim())
    throw Error(ErrorKind::Usage, "chart index out of range");
  if (I.is_unit()) return I;
  const int o = order(I);
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size());
  for (const auto& g : I.gens()) {
    std::vector<int> e = g.e;
    e[chart] = g.degree() - o;
    if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; }))
      return MonomialIdeal::unit(I.dim()); // a degree-o generator on this axis
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal::make(std::move(gens), I.dim());
}

namespace {

// A proper transform must have a pure power on every axis: on the chart axis
// this follows from M-primariness of the parent; on the others it is exactly
// the condition that the cosupport on the exceptional divisor is finite.
void check_cosupport(const MonomialIdeal& T, int chart,
                     const std::vector<int>& path) {
  for (int j = 0; j < T.dim(); ++j) {
    bool pure = false;
    for (const auto& g : T.gens()) {
      if (g.e[j] > 0 && g.e[j] == g.degree()) { pure = true; break; }
    }
    if (!pure) {
      if (j == chart)
        throw NotMPrimary("transform lost the pure power on its own chart axis");
      auto p = path;
      p.push_back(chart);
      throw NotFinitelySupported(std::move(p), j);
    }
  }
}

void build(ConstellationNode& node, int depth, int max_depth, int* count) {
  ++*count;
  node.order = order(node.local);
  if (depth >= max_depth) throw DepthExceeded(max_depth);
  for (int i = 0; i < node.local.dim(); ++i) {
    MonomialIdeal T = chart_transform(node.local, i);
    if (T.is_unit()) continue;
    check_cosupport(T, i, node.path);
    ConstellationNode child;
    child.path = node.path;
    child.path.push_back(i);
    child.local = T;
    build(child, depth + 1, max_depth, count);
    node.children.push_back(std::move(child));
  }
}

} // namespace

Constellation constellation(const MonomialIdeal& I, int max_depth) {
  if (I.is_unit()) throw UnitIdeal("constellation of the unit ideal requested");
  if (!is_mprimary(I)) throw NotMPrimary();
  Constellation c;
  c.root.local = I;
  build(c.root, 0, max_depth, &c.node_count);
  return c;
}

namespace {

void collect_orders(const ConstellationNode& n, std::vector<int>& out) {
  out.push_back(n.order);
  for (const auto& ch : n.children) collect_orders(ch, out);
}

} // namespace

std::vector<int> point_basis(const Constellation& c) {
  std::vector<int> orders;
  collect_orders(c.root, orders);
  std::sort(orders.begin(), orders.end(), std::greater<int>());
  return orders;
}

bool is_finitely_supported(const MonomialIdeal& I) {
  try {
    constellation(I);
    return true;
  } catch (const NotFinitelySupported&) {
    return false;
  }
}

namespace {

void build_joint(JointNode& node, int depth, int max_depth) {
  const int g = static_cast<int>(node.locals.size());
  const int d = node.locals.front().dim();
  node.orders.resize(g);
  for (int j = 0; j < g; ++j)
    node.orders[j] = node.locals[j].is_unit() ? 0 : order(node.locals[j]);
  if (depth >= max_depth) throw DepthExceeded(max_depth);
  for (int i = 0; i < d; ++i) {
    std::vector<MonomialIdeal> transforms;
    transforms.reserve(g);
    bool any_proper = false;
    for (int j = 0; j < g; ++j) {
      MonomialIdeal T = chart_transform(node.locals[j], i);
      if (!T.is_unit()) {
        check_cosupport(T, i, node.path);
        any_proper = true;
      }
      transforms.push_back(std::move(T));
    }
    if (!any_proper) continue;
    JointNode child;
    child.path = node.path;
    child.path.push_back(i);
    child.locals = std::move(transforms);
    build_joint(child, depth + 1, max_depth);
    node.children.push_back(std::move(child));
  }
}

} // namespace

JointNode joint_constellation(const std::vector<MonomialIdeal>& ideals,
                              int max_depth) {
  if (ideals.empty()) throw EmptyGeneratorSet();
  const int d = ideals.front().dim();
  for (const auto& I : ideals) {
    if (I.dim() != d) throw DimensionMismatch();
    if (I.is_unit()) throw UnitIdeal("joint constellation of the unit ideal requested");
    if (!is_mprimary(I)) throw NotMPrimary();
  }
  JointNode root;
  root.locals = ideals;
  build_joint(root, 0, max_depth);
  return root;
}

} // namespace cideal

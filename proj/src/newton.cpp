#include "cideal/newton.hpp"

#include <algorithm>
#include <cassert>

namespace cideal {

namespace {

// Primal simplex for  max sum(x)  s.t.  A x <= b,  x >= 0  with b >= 0,
// exact rational arithmetic, Bland's rule.  Returns the optimum.  The
// objective is bounded because every column of A is non-zero.
Rat simplex_max_sum(const std::vector<std::vector<int>>& A,
                    const std::vector<int>& b) {
  const size_t m = A.size();        // constraints
  const size_t n = A.empty() ? 0 : A[0].size(); // structural variables
  // tableau: rows 0..m-1 constraints, row m objective (reduced costs);
  // columns 0..n-1 structural, n..n+m-1 slack, last column rhs
  std::vector<std::vector<Rat>> T(m + 1, std::vector<Rat>(n + m + 1, 0));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1;
    T[i][n + m] = b[i];
  }
  for (size_t j = 0; j < n; ++j) T[m][j] = -1; // maximize sum of x
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = n + i;

  while (true) {
    // Bland: entering column = least index with negative reduced cost
    size_t enter = n + m;
    for (size_t j = 0; j < n + m; ++j) {
      if (T[m][j] < 0) { enter = j; break; }
    }
    if (enter == n + m) break; // optimal
    // ratio test, ties broken by least basis index
    size_t leave = m;
    Rat best;
    for (size_t i = 0; i < m; ++i) {
      if (T[i][enter] > 0) {
        Rat ratio = T[i][n + m] / T[i][enter];
        if (leave == m || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
    }
    assert(leave != m && "objective is bounded for proper monomial ideals");
    // pivot
    Rat piv = T[leave][enter];
    for (auto& t : T[leave]) t /= piv;
    for (size_t i = 0; i <= m; ++i) {
      if (i == leave) continue;
      Rat f = T[i][enter];
      if (f == 0) continue;
      for (size_t j = 0; j <= n + m; ++j) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  return T[m][n + m]; // optimal value of sum(x)
}

} // namespace

bool np_member(const MonomialIdeal& I, const std::vector<int>& v, int n) {
  if (static_cast<int>(v.size()) != I.dim()) throw DimensionMismatch();
  if (I.is_unit()) return true;
  for (int c : v)
    if (c < 0) throw Error(ErrorKind::Usage, "negative exponent in membership query");
  // v in n*NP(I)  iff  max{ sum lambda : A lambda <= v, lambda >= 0 } >= n:
  // a feasible lambda with sum s >= n scales down to sum exactly n.
  const size_t g = I.gens().size();
  std::vector<std::vector<int>> A(I.dim(), std::vector<int>(g));
  for (size_t j = 0; j < g; ++j)
    for (int i = 0; i < I.dim(); ++i) A[i][j] = I.gens()[j].e[i];
  return simplex_max_sum(A, v) >= n;
}

namespace {

// Shared search for the minimal lattice points of n*NP(I).
MonomialIdeal closure_impl(const MonomialIdeal& I, int n) {
  if (I.is_unit()) return I;
  std::vector<int> box(I.dim());
  Int size = 1;
  for (int i = 0; i < I.dim(); ++i) {
    int mx = 0;
    for (const auto& g : I.gens()) mx = std::max(mx, g.e[i]);
    box[i] = n * mx + 1;
    size *= box[i];
  }
  if (size > 4000000) throw BoxTooLarge("closure search box too large");
  // minimal generators lie in the degree band
  // [n o(I), n maxdeg(I) + dim - 1]: lower degrees are outside the
  // polyhedron, and a minimal point v dominates some hull point w with
  // w_i > v_i - 1 in every coordinate (otherwise a unit decrement stays
  // inside), so deg v < deg w + dim <= n maxdeg + dim
  int lo = 0, hi = 0;
  for (const auto& g : I.gens()) {
    int dg = g.degree();
    if (lo == 0 || dg < lo) lo = dg;
    hi = std::max(hi, dg);
  }
  lo *= n;
  hi = hi * n + I.dim() - 1;
  std::vector<Monomial> points;
  std::vector<int> v(I.dim(), 0);
  while (true) {
    int deg = 0;
    for (int c : v) deg += c;
    if (deg >= lo && deg <= hi) points.emplace_back(v);
    int i = 0;
    while (i < I.dim()) {
      if (++v[i] < box[i]) break;
      v[i] = 0;
      ++i;
    }
    if (i == I.dim()) break;
  }
  std::sort(points.begin(), points.end(), canonical_less);
  // membership in I^n is a cheap sufficient condition that avoids most of
  // the linear programs
  MonomialIdeal P = power(I, n);
  // graded sweep: every proper divisor of a point is visited earlier, so a
  // member not divisible by a previously found generator is minimal
  std::vector<Monomial> mins;
  for (const auto& p : points) {
    bool covered = false;
    for (const auto& m : mins) {
      if (m.divides(p)) { covered = true; break; }
    }
    if (covered) continue;
    if (P.contains(p) || np_member(I, p.e, n)) mins.push_back(p);
  }
  return MonomialIdeal::make(std::move(mins), I.dim());
}

} // namespace

MonomialIdeal closure(const MonomialIdeal& I) {
  if (I.is_unit()) throw UnitIdeal("closure of the unit ideal requested");
  return closure_impl(I, 1);
}

MonomialIdeal closure_power(const MonomialIdeal& I, int n) {
  if (n < 0) throw Error(ErrorKind::Usage, "negative power");
  if (n == 0) return MonomialIdeal::unit(I.dim());
  if (I.is_unit()) throw UnitIdeal("closure of the unit ideal requested");
  return closure_impl(I, n);
}

bool is_integrally_closed(const MonomialIdeal& I) {
  return closure(I) == I;
}

MonomialIdeal star_product(const MonomialIdeal& I, const MonomialIdeal& J) {
  return closure(product(I, J));
}

MiClosedness mi_closedness(const MonomialIdeal& I) {
  MonomialIdeal MI = product(MonomialIdeal::maximal(I.dim()), I);
  MonomialIdeal C = closure(MI);
  if (C == MI) return {true, std::nullopt};
  // some minimal generator of the closure lies outside MI; generators are in
  // canonical order, so the first one found is the canonical witness
  for (const auto& g : C.gens()) {
    if (!MI.contains(g)) return {false, g};
  }
  // unreachable: C != MI with C superset MI forces a generator outside MI
  throw Error(ErrorKind::MathFailure, "closure(MI) != MI but no witness generator");
}

} // namespace cideal

#include "cideal/mult.hpp"

#include <algorithm>

namespace cideal {

namespace {

bool colex_less(const std::vector<int>& a, const std::vector<int>& b) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

void gen_indices(int g, int sum, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  if (g == 1) {
    cur.push_back(sum);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int i = 0; i <= sum; ++i) {
    cur.push_back(i);
    gen_indices(g - 1, sum - i, cur, out);
    cur.pop_back();
  }
}

Int ipow(const Int& b, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

} // namespace

std::vector<std::vector<int>> multi_indices(int g, int sum) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  gen_indices(g, sum, cur, out);
  std::sort(out.begin(), out.end(), colex_less);
  return out;
}

namespace {

Int sample_length(const std::vector<MonomialIdeal>& ideals,
                  const std::vector<int>& n) {
  const int d = ideals.front().dim();
  MonomialIdeal P = MonomialIdeal::unit(d);
  for (size_t j = 0; j < ideals.size(); ++j)
    if (n[j] > 0) P = product(P, power(ideals[j], n[j]));
  if (P.is_unit()) return 0;
  return colength(closure(P));
}

// Exact solve of a square rational system by Gaussian elimination.
std::vector<Rat> solve(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
  const size_t n = A.size();
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && A[p][c] == 0) ++p;
    if (p == n) throw Error(ErrorKind::MathFailure, "singular fitting system");
    std::swap(A[p], A[c]);
    std::swap(b[p], b[c]);
    for (size_t r = 0; r < n; ++r) {
      if (r == c || A[r][c] == 0) continue;
      Rat f = A[r][c] / A[c][c];
      for (size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<Rat> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
  return x;
}

struct Fit {
  std::vector<std::vector<int>> exps; // monomial exponents, all |a| <= d
  std::vector<Rat> coeffs;
  Rat eval(const std::vector<int>& n) const {
    Rat v = 0;
    for (size_t k = 0; k < exps.size(); ++k) {
      Rat term = coeffs[k];
      for (size_t i = 0; i < n.size(); ++i) term *= ipow(n[i], exps[k][i]);
      v += term;
    }
    return v;
  }
};

// Interpolate l(R/closure(prod I_j^{n_j})) on the principal lattice
// {n : |n| <= d} and verify at points of degree d+1.
Fit fit_length_polynomial(const std::vector<MonomialIdeal>& ideals) {
  const int d = ideals.front().dim();
  const int g = static_cast<int>(ideals.size());
  Fit fit;
  for (int s = 0; s <= d; ++s)
    for (auto& a : multi_indices(g, s)) fit.exps.push_back(a);
  const size_t N = fit.exps.size();
  std::vector<std::vector<Rat>> A(N, std::vector<Rat>(N));
  std::vector<Rat> b(N);
  for (size_t p = 0; p < N; ++p) {
    const auto& pt = fit.exps[p]; // sample points = same lattice
    for (size_t k = 0; k < N; ++k) {
      Rat v = 1;
      for (int i = 0; i < g; ++i) v *= ipow(pt[i], fit.exps[k][i]);
      A[p][k] = v;
    }
    b[p] = Rat(sample_length(ideals, pt));
  }
  fit.coeffs = solve(std::move(A), std::move(b));
  // out-of-sample verification
  std::vector<std::vector<int>> checks;
  {
    std::vector<int> v(g, 0);
    v[0] = d + 1;
    checks.push_back(v);
    std::vector<int> w(g, 0);
    w[g - 1] = d + 1;
    if (w != v) checks.push_back(w);
    else checks.push_back({d + 2});
  }
  for (const auto& pt : checks) {
    if (fit.eval(pt) != Rat(sample_length(ideals, pt)))
      throw Error(ErrorKind::MathFailure,
                  "fitted length polynomial fails out-of-sample verification");
  }
  return fit;
}

} // namespace

MultReport mixed_multiplicities(const std::vector<MonomialIdeal>& ideals) {
  if (ideals.empty()) throw EmptyGeneratorSet();
  const int d = ideals.front().dim();
  const int g = static_cast<int>(ideals.size());
  for (const auto& I : ideals) {
    if (I.dim() != d) throw DimensionMismatch();
    if (!is_mprimary(I)) throw NotMPrimary();
  }
  MultReport rep;
  Fit fit = fit_length_polynomial(ideals);
  for (auto& a : multi_indices(g, d)) {
    // e_a = a! times the coefficient of n^a in the degree-d part
    Rat c = 0;
    for (size_t k = 0; k < fit.exps.size(); ++k)
      if (fit.exps[k] == a) c = fit.coeffs[k];
    for (int i = 0; i < g; ++i) c *= factorial(a[i]);
    if (boost::multiprecision::denominator(c) != 1 || c < 0)
      throw Error(ErrorKind::MathFailure,
                  "mixed multiplicity is not a non-negative integer");
    rep.mixed[a] = boost::multiprecision::numerator(c);
  }
  rep.source = MultSource::Fitting;
  // point-basis route when every ideal is finitely supported
  bool all_fs = true;
  try {
    JointNode root = joint_constellation(ideals);
    std::vector<const JointNode*> stack{&root};
    std::map<std::vector<int>, Int> pb;
    for (auto& a : multi_indices(g, d)) pb[a] = 0;
    while (!stack.empty()) {
      const JointNode* n = stack.back();
      stack.pop_back();
      for (auto& [a, v] : pb) {
        Int term = 1;
        for (int j = 0; j < g; ++j) term *= ipow(n->orders[j], a[j]); // 0^0 = 1
        v += term;
      }
      for (const auto& ch : n->children) stack.push_back(&ch);
    }
    for (auto& [a, v] : pb) {
      if (v != rep.mixed[a]) {
        std::string s = "point-basis/fitting mismatch at (";
        for (int i = 0; i < g; ++i) s += (i ? "," : "") + std::to_string(a[i]);
        s += "): " + v.str() + " vs " + rep.mixed[a].str();
        rep.discrepancies.push_back(s);
      }
    }
    rep.source = MultSource::Both;
  } catch (const NotFinitelySupported&) {
    all_fs = false;
    rep.notices.push_back("not finitely supported; fitting path only");
  }
  (void)all_fs;
  if (g == 1) rep.e = rep.mixed.at({d});
  else {
    // e at the index concentrated on the first ideal
    std::vector<int> a(g, 0);
    a[0] = d;
    rep.e = rep.mixed.at(a);
  }
  return rep;
}

Int multiplicity(const MonomialIdeal& I) {
  if (!is_mprimary(I)) throw NotMPrimary();
  const int d = I.dim();
  Int fitted = hilbert_table(I).multiplicity;
  try {
    Constellation c = constellation(I);
    Int pb = 0;
    for (int o : point_basis(c)) pb += ipow(o, d);
    if (pb != fitted)
      throw Error(ErrorKind::MathFailure,
                  "point-basis multiplicity " + pb.str() +
                      " disagrees with Hilbert fit " + fitted.str());
  } catch (const NotFinitelySupported&) {
    // fitting path only
  }
  return fitted;
}

std::vector<Int> fiber_numerator(const MonomialIdeal& I, int n_max) {
  if (!is_mprimary(I)) throw NotMPrimary();
  const int d = I.dim();
  if (n_max < d + 2) throw Error(ErrorKind::Usage, "fiber numerator needs n_max >= d + 2");
  std::vector<Int> mus;
  MonomialIdeal P = MonomialIdeal::unit(d);
  mus.push_back(1); // mu(I^0)
  for (int n = 1; n <= n_max; ++n) {
    P = product(P, I);
    mus.push_back(mu(P));
  }
  // numerator = (1 - t)^d * sum mu(I^n) t^n, truncated
  std::vector<Int> c(n_max + 1, 0);
  for (int k = 0; k <= n_max; ++k) {
    for (int i = 0; i <= std::min(k, d); ++i) {
      Int term = binomial(d, i) * mus[k - i];
      if (i % 2 == 0) c[k] += term;
      else c[k] -= term;
    }
  }
  int last = -1;
  for (int k = 0; k <= n_max; ++k)
    if (c[k] != 0) last = k;
  if (last > n_max - 2) throw NonPolynomialTail();
  c.resize(last + 1);
  return c;
}

} // namespace cideal

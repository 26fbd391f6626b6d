#include "cideal/hd.hpp"

namespace cideal {

namespace {

void collect_terms(const ConstellationNode& n, int d, std::vector<HDNodeTerm>& out) {
  out.push_back({n.path, n.order, binomial(n.order + d - 1, d)});
  for (const auto& ch : n.children) collect_terms(ch, d, out);
}

} // namespace

Int hd_sum(const Constellation& c, int d) {
  std::vector<HDNodeTerm> terms;
  collect_terms(c.root, d, terms);
  Int s = 0;
  for (const auto& t : terms) s += t.term;
  return s;
}

HDReport hd_check(const MonomialIdeal& I) {
  Constellation c = constellation(I);
  HDReport r;
  collect_terms(c.root, I.dim(), r.per_node);
  r.hd_sum = 0;
  for (const auto& t : r.per_node) r.hd_sum += t.term;
  r.colength_closure = colength(closure(I));
  r.defect = r.hd_sum - r.colength_closure;
  return r;
}

HDReport defect_report(int dim, const Int& colength_of_ideal, int root_order,
                       const std::vector<Int>& transform_lengths) {
  if (dim < 2 || root_order < 1)
    throw InsufficientData("defect assembly needs dim >= 2 and a positive root order");
  HDReport r;
  r.per_node.push_back({{}, root_order, binomial(root_order + dim - 1, dim)});
  r.hd_sum = r.per_node[0].term;
  for (const auto& l : transform_lengths) r.hd_sum += l;
  r.colength_closure = colength_of_ideal;
  r.defect = r.hd_sum - r.colength_closure;
  return r;
}

Rat eval_poly(const std::vector<Rat>& coeffs, const Int& n) {
  Rat v = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * n + *it;
  return v;
}

namespace {

// Exact Lagrange interpolation through (x_i, y_i), monomial-basis result.
std::vector<Rat> lagrange(const std::vector<int>& xs, const std::vector<Int>& ys) {
  const size_t k = xs.size();
  std::vector<Rat> acc(k, 0);
  for (size_t i = 0; i < k; ++i) {
    // numerator polynomial prod_{j != i} (n - x_j)
    std::vector<Rat> num(1, 1);
    Rat denom = 1;
    for (size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      num.push_back(0);
      for (size_t t = num.size() - 1; t > 0; --t)
        num[t] = num[t - 1] - Rat(xs[j]) * num[t];
      num[0] = -Rat(xs[j]) * num[0];
      denom *= Rat(xs[i]) - Rat(xs[j]);
    }
    Rat scale = Rat(ys[i]) / denom;
    for (size_t t = 0; t < num.size(); ++t) acc[t] += scale * num[t];
  }
  while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
  return acc;
}

} // namespace

HilbertTable hilbert_table(const MonomialIdeal& I, int n_max) {
  const int d = I.dim();
  if (n_max < 0) n_max = d + 3;
  if (n_max < d + 2)
    throw Error(ErrorKind::Usage, "hilbert table needs n_max >= d + 2");
  if (!is_mprimary(I)) throw NotMPrimary();
  HilbertTable t;
  for (int n = 0; n <= n_max; ++n)
    t.samples[n] = colength(closure_power(I, n));
  std::vector<int> xs;
  std::vector<Int> ys;
  for (int n = n_max - d; n <= n_max; ++n) {
    xs.push_back(n);
    ys.push_back(t.samples[n]);
  }
  t.fitted = lagrange(xs, ys);
  if (static_cast<int>(t.fitted.size()) != d + 1)
    throw Error(ErrorKind::MathFailure,
                "Hilbert polynomial has degree != d; refusing to fit");
  Rat lead = t.fitted.back();
  Rat e = lead;
  for (int k = 2; k <= d; ++k) e *= k;
  if (e <= 0 || boost::multiprecision::denominator(e) != 1)
    throw Error(ErrorKind::MathFailure,
                "normalized leading coefficient is not a positive integer");
  t.multiplicity = boost::multiprecision::numerator(e);
  // back-check for the first n where the fit holds onward
  t.fit_valid_from = n_max - d;
  for (int n = n_max - d - 1; n >= 0; --n) {
    if (eval_poly(t.fitted, n) == Rat(t.samples[n])) t.fit_valid_from = n;
    else break;
  }
  return t;
}

} // namespace cideal

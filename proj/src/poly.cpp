#include "cideal/poly.hpp"

#include <algorithm>
#include <numeric>

namespace cideal {

bool DegRevLexLess::operator()(const std::vector<int>& a,
                               const std::vector<int>& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

Polynomial Polynomial::term(int dim, std::vector<int> exps, Rat c) {
  Polynomial p(dim);
  if (c != 0) p.terms_.emplace(std::move(exps), std::move(c));
  return p;
}

Polynomial Polynomial::from_monomial(const Monomial& m) {
  return term(m.dim(), m.e, 1);
}

const std::vector<int>& Polynomial::leading_exponent() const {
  if (is_zero()) throw Error(ErrorKind::Usage, "leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const Rat& Polynomial::leading_coeff() const {
  if (is_zero()) throw Error(ErrorKind::Usage, "leading term of zero polynomial");
  return terms_.rbegin()->second;
}

int Polynomial::max_degree() const {
  if (is_zero()) return 0;
  const auto& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

int Polynomial::origin_order() const {
  if (is_zero()) throw Error(ErrorKind::Usage, "order of zero polynomial");
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = std::accumulate(e.begin(), e.end(), 0);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

void Polynomial::add_term(const std::vector<int>& exps, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Polynomial Polynomial::times_term(const std::vector<int>& exps, const Rat& c) const {
  Polynomial r(dim_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) {
    std::vector<int> s(dim_);
    for (int i = 0; i < dim_; ++i) s[i] = e[i] + exps[i];
    r.terms_.emplace(std::move(s), k * c);
  }
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(dim_);
  for (const auto& [e, c] : o.terms_) r = r + times_term(e, c);
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial r(dim_);
  Rat lc = leading_coeff();
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c / lc);
  return r;
}

namespace {

bool exp_divides(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<int> exp_lcm(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> l(a.size());
  for (size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

std::vector<int> exp_sub(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

} // namespace

Polynomial normal_form(Polynomial f, const std::vector<Polynomial>& basis,
                       int degree_guard) {
  Polynomial rem(f.dim());
  while (!f.is_zero()) {
    if (f.max_degree() > degree_guard) throw DegreeBlowup(degree_guard);
    const auto lt = f.leading_exponent();
    const Rat lc = f.leading_coeff();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (exp_divides(g.leading_exponent(), lt)) {
        f = f - g.times_term(exp_sub(lt, g.leading_exponent()),
                             lc / g.leading_coeff());
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.add_term(lt, lc);
      f.add_term(lt, -lc);
    }
  }
  return rem;
}

PolynomialIdeal::PolynomialIdeal(int dim, std::vector<Polynomial> gens)
    : dim_(dim), gens_(std::move(gens)) {
  for (const auto& g : gens_)
    if (g.dim() != dim_) throw DimensionMismatch();
  gens_.erase(std::remove_if(gens_.begin(), gens_.end(),
                             [](const Polynomial& p) { return p.is_zero(); }),
              gens_.end());
  if (gens_.empty()) throw EmptyGeneratorSet();
}

PolynomialIdeal PolynomialIdeal::from_monomial_ideal(const MonomialIdeal& I) {
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(Polynomial::from_monomial(g));
  return PolynomialIdeal(I.dim(), std::move(gens));
}

namespace {

struct Pair {
  size_t i, j;
  int lcm_deg;
  size_t idx; // creation index, tie-break
};

std::vector<Polynomial> interreduce(std::vector<Polynomial> basis, int guard) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].is_zero()) continue;
      std::vector<Polynomial> others;
      for (size_t j = 0; j < basis.size(); ++j)
        if (j != i && !basis[j].is_zero()) others.push_back(basis[j]);
      if (others.empty()) break;
      Polynomial r = normal_form(basis[i], others, guard);
      if (!(r == basis[i])) changed = true;
      basis[i] = std::move(r);
    }
  }
  std::vector<Polynomial> out;
  for (auto& p : basis)
    if (!p.is_zero()) out.push_back(p.monic());
  return out;
}

} // namespace

const std::vector<Polynomial>& PolynomialIdeal::groebner(int degree_guard) const {
  if (gb_) return *gb_;
  std::vector<Polynomial> basis = interreduce(gens_, degree_guard);
  std::vector<Pair> pairs;
  size_t next_idx = 0;
  auto push_pairs = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) {
      // monomial-monomial S-pairs vanish identically
      if (basis[i].terms().size() == 1 && basis[j].terms().size() == 1) continue;
      const auto& a = basis[i].leading_exponent();
      const auto& b = basis[j].leading_exponent();
      // product criterion: coprime leading terms
      bool coprime = true;
      for (size_t k = 0; k < a.size(); ++k)
        if (a[k] > 0 && b[k] > 0) { coprime = false; break; }
      if (coprime) continue;
      auto l = exp_lcm(a, b);
      pairs.push_back({i, j, std::accumulate(l.begin(), l.end(), 0), next_idx++});
    }
  };
  for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  while (!pairs.empty()) {
    // normal strategy: least lcm degree, ties by creation index
    auto best = pairs.begin();
    for (auto it = pairs.begin(); it != pairs.end(); ++it) {
      if (it->lcm_deg < best->lcm_deg ||
          (it->lcm_deg == best->lcm_deg && it->idx < best->idx))
        best = it;
    }
    Pair p = *best;
    pairs.erase(best);
    const auto& fi = basis[p.i];
    const auto& fj = basis[p.j];
    auto l = exp_lcm(fi.leading_exponent(), fj.leading_exponent());
    Polynomial s =
        fi.times_term(exp_sub(l, fi.leading_exponent()), Rat(1) / fi.leading_coeff()) -
        fj.times_term(exp_sub(l, fj.leading_exponent()), Rat(1) / fj.leading_coeff());
    Polynomial r = normal_form(std::move(s), basis, degree_guard);
    if (!r.is_zero()) {
      basis.push_back(r.monic());
      push_pairs(basis.size() - 1);
    }
  }

  // reduce: drop elements whose leading term is divisible by another's, then
  // tail-reduce everything
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      if (exp_divides(basis[j].leading_exponent(), basis[i].leading_exponent())) {
        // ties (equal leading terms) keep the earlier element
        if (basis[j].leading_exponent() == basis[i].leading_exponent() && j > i)
          continue;
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(basis[i]);
  }
  std::vector<Polynomial> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = others.empty() ? minimal[i]
                                  : normal_form(minimal[i], others, degree_guard);
    reduced.push_back(r.monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const Polynomial& a, const Polynomial& b) {
              return DegRevLexLess{}(a.leading_exponent(), b.leading_exponent());
            });
  gb_ = std::move(reduced);
  return *gb_;
}

bool member(const Polynomial& f, const PolynomialIdeal& I) {
  if (f.dim() != I.dim()) throw DimensionMismatch();
  if (f.is_zero()) return true;
  return normal_form(f, I.groebner(), std::max(60, f.max_degree())).is_zero();
}

MonomialIdeal leading_term_ideal(const PolynomialIdeal& I) {
  std::vector<Monomial> lts;
  for (const auto& g : I.groebner()) lts.emplace_back(g.leading_exponent());
  return MonomialIdeal::make(std::move(lts), I.dim());
}

Int gb_colength(const PolynomialIdeal& I) {
  MonomialIdeal lt = leading_term_ideal(I);
  if (lt.is_unit()) return 0;
  try {
    return colength(lt);
  } catch (const NotMPrimary&) {
    throw NotZeroDimensional();
  }
}

PolynomialIdeal ideal_product(const PolynomialIdeal& I, const PolynomialIdeal& J) {
  if (I.dim() != J.dim()) throw DimensionMismatch();
  std::vector<Polynomial> gens;
  gens.reserve(I.gens().size() * J.gens().size());
  for (const auto& f : I.gens())
    for (const auto& g : J.gens()) gens.push_back(f * g);
  return PolynomialIdeal(I.dim(), std::move(gens));
}

int ideal_order(const PolynomialIdeal& I) {
  int o = -1;
  for (const auto& g : I.gens()) {
    int d = g.origin_order();
    if (o < 0 || d < o) o = d;
  }
  return o;
}

PolynomialIdeal poly_transform(const PolynomialIdeal& I, int chart) {
  if (chart < 0 || chart >= I.dim())
    throw Error(ErrorKind::Usage, "chart index out of range");
  const int o = ideal_order(I);
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) {
    Polynomial h(I.dim());
    for (const auto& [e, c] : g.terms()) {
      // x^a -> x_i^(deg a) * prod_{j != i} x_j^{a_j}, then divide by x_i^o
      int deg = std::accumulate(e.begin(), e.end(), 0);
      std::vector<int> s = e;
      s[chart] = deg - o;
      if (s[chart] < 0)
        throw Error(ErrorKind::MathFailure, "transform not divisible by the exceptional power");
      h.add_term(s, c);
    }
    gens.push_back(std::move(h));
  }
  return PolynomialIdeal(I.dim(), std::move(gens));
}

} // namespace cideal

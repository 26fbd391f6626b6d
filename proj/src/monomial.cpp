#include "cideal/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace cideal {

Int binomial(const Int& a, const Int& b) {
  if (b < 0 || a < b) return 0;
  Int r = 1;
  for (Int i = 0; i < b; ++i) {
    r *= (a - i);
    r /= (i + 1); // exact: product of k consecutive integers is divisible by k!
  }
  return r;
}

int Monomial::degree() const {
  return std::accumulate(e.begin(), e.end(), 0);
}

bool Monomial::divides(const Monomial& other) const {
  if (e.size() != other.e.size()) throw DimensionMismatch();
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > other.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (e.size() != other.e.size()) throw DimensionMismatch();
  Monomial r;
  r.e.resize(e.size());
  for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + other.e[i];
  return r;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // reverse-lexicographic: scan from the last variable; the monomial with
  // the larger exponent at the last difference sorts first
  for (int i = a.dim() - 1; i >= 0; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  }
  return false;
}

MonomialIdeal MonomialIdeal::make(std::vector<Monomial> gens, int dim) {
  if (gens.empty()) throw EmptyGeneratorSet();
  for (const auto& g : gens)
    if (g.dim() != dim) throw DimensionMismatch();
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // keep divisibility-minimal elements; sorting by degree means a divisor
  // always precedes its multiples
  std::vector<Monomial> minimal;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& m : minimal) {
      if (m.divides(g)) { redundant = true; break; }
    }
    if (!redundant) minimal.push_back(g);
  }
  return MonomialIdeal(std::move(minimal), dim);
}

MonomialIdeal MonomialIdeal::unit(int dim) {
  return make({Monomial(std::vector<int>(dim, 0))}, dim);
}

MonomialIdeal MonomialIdeal::maximal(int dim) {
  std::vector<Monomial> gens;
  for (int i = 0; i < dim; ++i) {
    std::vector<int> e(dim, 0);
    e[i] = 1;
    gens.emplace_back(std::move(e));
  }
  return make(std::move(gens), dim);
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.dim() != dim_) throw DimensionMismatch();
  for (const auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  if (other.dim() != dim_) throw DimensionMismatch();
  for (const auto& g : other.gens())
    if (!contains(g)) return false;
  return true;
}

int order(const MonomialIdeal& I) {
  int o = I.gens().front().degree(); // canonical order puts min degree first
  if (o == 0) throw UnitIdeal("order of the unit ideal requested");
  return o;
}

int mu(const MonomialIdeal& I) { return static_cast<int>(I.gens().size()); }

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.dim() != J.dim()) throw DimensionMismatch();
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size() * J.gens().size());
  for (const auto& a : I.gens())
    for (const auto& b : J.gens())
      gens.push_back(a * b);
  return MonomialIdeal::make(std::move(gens), I.dim());
}

MonomialIdeal power(const MonomialIdeal& I, int n) {
  if (n < 0) throw Error(ErrorKind::Usage, "negative ideal power");
  MonomialIdeal r = MonomialIdeal::unit(I.dim());
  for (int k = 0; k < n; ++k) r = product(r, I);
  return r;
}

bool is_mprimary(const MonomialIdeal& I) {
  for (int i = 0; i < I.dim(); ++i) {
    bool found = false;
    for (const auto& g : I.gens()) {
      if (g.e[i] > 0 && g.e[i] == g.degree()) { found = true; break; }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<int> pure_power_exponents(const MonomialIdeal& I) {
  std::vector<int> p(I.dim(), -1);
  for (int i = 0; i < I.dim(); ++i) {
    for (const auto& g : I.gens()) {
      if (g.e[i] == g.degree() && g.e[i] > 0) {
        if (p[i] < 0 || g.e[i] < p[i]) p[i] = g.e[i];
      }
    }
    if (p[i] < 0) throw NotMPrimary("no pure power of variable " + std::to_string(i + 1));
  }
  return p;
}

Int colength(const MonomialIdeal& I) {
  if (I.is_unit()) return 0;
  auto box = pure_power_exponents(I);
  Int size = 1;
  for (int b : box) size *= b;
  if (size > 4000000) throw BoxTooLarge();
  // count exponent vectors under the staircase
  std::vector<int> v(I.dim(), 0);
  Int count = 0;
  while (true) {
    if (!I.contains(Monomial(v))) ++count;
    int i = 0;
    while (i < I.dim()) {
      if (++v[i] < box[i]) break;
      v[i] = 0;
      ++i;
    }
    if (i == I.dim()) break;
  }
  return count;
}

std::vector<std::string> default_vars(int dim) {
  static const char* names[] = {"x", "y", "z"};
  std::vector<std::string> vars;
  for (int i = 0; i < dim; ++i) {
    if (dim <= 3) vars.push_back(names[i]);
    else vars.push_back("x" + std::to_string(i + 1));
  }
  return vars;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& vars) {
  if (m.is_one()) return "1";
  std::string s;
  for (int i = 0; i < m.dim(); ++i) {
    if (m.e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s;
}

std::string to_string(const MonomialIdeal& I, const std::vector<std::string>& vars) {
  std::string s;
  for (const auto& g : I.gens()) {
    if (!s.empty()) s += ", ";
    s += to_string(g, vars);
  }
  return s;
}

} // namespace cideal

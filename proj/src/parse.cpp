#include "cideal/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cideal {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  char get() {
    char c = s[pos++];
    if (c == '\n') { ++line; col = 1; }
    else ++col;
    return c;
  }
  void skip_space() {
    while (!done() && (peek() == ' ' || peek() == '\t')) get();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line, col, msg);
  }
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

int parse_uint(Cursor& c) {
  c.skip_space();
  if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
    c.fail("expected a number");
  long v = 0;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    v = v * 10 + (c.get() - '0');
    if (v > 1000000) c.fail("number too large");
  }
  return static_cast<int>(v);
}

// term := [coef ['*']] factor ('*'? factor)* | coef
// factor := var ('^' uint)?
Polynomial parse_term(Cursor& c, const std::vector<std::string>& vars, int sign) {
  const int d = static_cast<int>(vars.size());
  Rat coef = sign;
  std::vector<int> exps(d, 0);
  bool saw_factor = false;
  while (true) {
    c.skip_space();
    if (c.done()) break;
    char ch = c.peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      Int num = parse_uint(c);
      c.skip_space();
      if (!c.done() && c.peek() == '/') {
        c.get();
        Int den = parse_uint(c);
        if (den == 0) c.fail("zero denominator");
        coef *= Rat(num, den);
      } else {
        coef *= Rat(num);
      }
      saw_factor = true;
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string name;
      int at_line = c.line, at_col = c.col;
      while (!c.done() && ident_char(c.peek())) name += c.get();
      auto it = std::find(vars.begin(), vars.end(), name);
      if (it == vars.end())
        throw ParseError(at_line, at_col, "unknown variable '" + name + "'");
      int idx = static_cast<int>(it - vars.begin());
      int e = 1;
      c.skip_space();
      if (!c.done() && c.peek() == '^') {
        c.get();
        e = parse_uint(c);
      }
      exps[idx] += e;
      saw_factor = true;
    } else {
      break;
    }
    c.skip_space();
    if (!c.done() && c.peek() == '*') { c.get(); continue; }
    // juxtaposition: another factor may follow directly
    if (!c.done() && (std::isalnum(static_cast<unsigned char>(c.peek())) ||
                      c.peek() == '_'))
      continue;
    break;
  }
  if (!saw_factor) c.fail("expected a term");
  return Polynomial::term(d, std::move(exps), coef);
}

Polynomial parse_poly_expr(Cursor& c, const std::vector<std::string>& vars) {
  Polynomial p(static_cast<int>(vars.size()));
  int sign = 1;
  c.skip_space();
  if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
    sign = (c.get() == '-') ? -1 : 1;
  }
  while (true) {
    p = p + parse_term(c, vars, sign);
    c.skip_space();
    if (c.done() || (c.peek() != '+' && c.peek() != '-')) break;
    sign = (c.get() == '-') ? -1 : 1;
  }
  return p;
}

std::string strip_comments(const std::string& text) {
  std::string out;
  bool in_comment = false;
  for (char ch : text) {
    if (ch == '#') in_comment = true;
    if (ch == '\n') in_comment = false;
    out += in_comment ? (ch == '\n' ? '\n' : ' ') : ch;
  }
  return out;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') { out.push_back(cur); cur.clear(); }
    else cur += ch;
  }
  out.push_back(cur);
  for (auto& v : out) {
    v.erase(0, v.find_first_not_of(" \t\r"));
    auto e = v.find_last_not_of(" \t\r");
    v.erase(e == std::string::npos ? 0 : e + 1);
  }
  out.erase(std::remove(out.begin(), out.end(), std::string{}), out.end());
  return out;
}

} // namespace

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& vars) {
  Cursor c{text};
  Polynomial p = parse_poly_expr(c, vars);
  c.skip_space();
  if (!c.done()) c.fail("trailing input after polynomial");
  return p;
}

ParsedIdeal parse_ideal(const std::string& text,
                        std::optional<std::vector<std::string>> vars_override) {
  std::string body = strip_comments(text);
  std::vector<std::string> vars;
  // optional header line "vars: a,b,c"; blanked out in place so later error
  // positions stay correct
  {
    size_t line_start = 0;
    while (line_start < body.size()) {
      size_t line_end = body.find('\n', line_start);
      if (line_end == std::string::npos) line_end = body.size();
      std::string t = body.substr(line_start, line_end - line_start);
      t.erase(0, t.find_first_not_of(" \t\r"));
      if (!t.empty()) {
        if (t.rfind("vars:", 0) == 0 || t.rfind("variables:", 0) == 0) {
          vars = split_csv(t.substr(t.find(':') + 1));
          for (size_t i = line_start; i < line_end; ++i) body[i] = ' ';
        }
        break;
      }
      line_start = line_end + 1;
    }
  }
  if (vars_override) vars = *vars_override;
  if (vars.empty()) vars = default_vars(3);
  const int d = static_cast<int>(vars.size());
  if (d < 2) throw ParseError(1, 1, "at least two variables are required");

  ParsedIdeal out;
  out.vars = vars;
  std::vector<Polynomial> polys;
  Cursor c{body};
  while (true) {
    // skip separators
    while (!c.done() && (c.peek() == ' ' || c.peek() == '\t' || c.peek() == '\r' ||
                         c.peek() == '\n' || c.peek() == ','))
      c.get();
    if (c.done()) break;
    Cursor start = c;
    // read one generator: up to the next ',' or newline
    std::string chunk;
    while (!c.done() && c.peek() != ',' && c.peek() != '\n') chunk += c.get();
    Cursor cc{chunk};
    cc.line = start.line;
    cc.col = start.col;
    Polynomial p = parse_poly_expr(cc, vars);
    cc.skip_space();
    if (!cc.done()) cc.fail("unexpected trailing input in generator");
    if (p.is_zero()) start.fail("zero generator");
    polys.push_back(std::move(p));
  }
  if (polys.empty()) throw ParseError(1, 1, "no generators");

  bool monomial = true;
  for (const auto& p : polys)
    if (p.terms().size() != 1 || p.leading_coeff() != 1) { monomial = false; break; }
  out.monomial = monomial;
  if (monomial) {
    std::vector<Monomial> gens;
    for (const auto& p : polys) gens.emplace_back(p.leading_exponent());
    out.mono = MonomialIdeal::make(std::move(gens), d);
  } else {
    out.poly = PolynomialIdeal(d, std::move(polys));
  }
  return out;
}

const MonomialIdeal& ParsedIdeal::as_monomial() const {
  if (!mono)
    throw Error(ErrorKind::Usage, "a monomial ideal is required here");
  return *mono;
}

PolynomialIdeal ParsedIdeal::as_polynomial() const {
  if (poly) return *poly;
  return PolynomialIdeal::from_monomial_ideal(*mono);
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::string s;
  // print leading term first
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rat a = c;
    if (s.empty()) {
      if (a < 0) { s += "-"; a = -a; }
    } else {
      s += (a < 0) ? " - " : " + ";
      if (a < 0) a = -a;
    }
    Monomial m{e};
    bool one = (a == 1);
    if (!one || m.is_one()) {
      std::ostringstream os;
      os << a;
      s += os.str();
      if (!m.is_one()) s += "*";
    }
    if (!m.is_one()) s += to_string(m, vars);
  }
  return s;
}

} // namespace cideal

#pragma once

#include <optional>
#include <string>

#include "cideal/poly.hpp"

namespace cideal {

/// Parsed ideal file: optional `vars: x,y,z` header, then generators
/// separated by commas or newlines, `#` comments.  Kind is inferred:
/// monomial iff every generator is a single term with coefficient 1.
struct ParsedIdeal {
  std::vector<std::string> vars;
  bool monomial = false;
  std::optional<MonomialIdeal> mono;
  std::optional<PolynomialIdeal> poly;

  const MonomialIdeal& as_monomial() const;
  PolynomialIdeal as_polynomial() const;
};

/// `vars_override` (e.g. from --vars) wins over the file header; the
/// default variable set is x,y,z.  Unknown variables are parse errors.
ParsedIdeal parse_ideal(const std::string& text,
                        std::optional<std::vector<std::string>> vars_override = std::nullopt);

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& vars);

std::string to_string(const Polynomial& p, const std::vector<std::string>& vars);

} // namespace cideal

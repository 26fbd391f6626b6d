#pragma once

#include "cideal/parse.hpp"

namespace cideal::fixtures {

// Built-in corpus; the .ideal files under fixtures/ carry the same text.
extern const char* ex71_text;
extern const char* ex71_J_text;
extern const char* ex72_text;
extern const char* ex72_J_text;
extern const char* ex73_r3_text;
extern const char* ex73_J_text;
extern const char* ex74_i1_text;
extern const char* ex74_i2_text;
extern const char* ex74_product_text;
extern const char* m_text;
extern const char* m_cubed_text;

MonomialIdeal ex71();
PolynomialIdeal ex71_J();
PolynomialIdeal ex72();
PolynomialIdeal ex72_J();
PolynomialIdeal ex73_r3();
PolynomialIdeal ex73_J();
MonomialIdeal ex74_i1();
MonomialIdeal ex74_i2();
MonomialIdeal ex74_product();

struct CheckResult {
  std::string group; // ex71 / ex72 / ex73 / ex74
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Every frozen value from the worked examples, exact comparisons only.
std::vector<CheckResult> run_all();

} // namespace cideal::fixtures

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cideal {

// Exit-code categories used by the CLI (see tools/).
enum class ErrorKind {
  MathFailure = 1,         // a verified-false mathematical assertion
  HypothesisViolation = 2, // input outside the stated hypotheses
  Usage = 3,               // parse / usage problems
  Resource = 4,            // depth / degree / box guards
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& w = "ambient dimension mismatch")
      : Error(ErrorKind::Usage, w) {}
};

struct EmptyGeneratorSet : Error {
  EmptyGeneratorSet() : Error(ErrorKind::Usage, "empty generator set") {}
};

struct UnitIdeal : Error {
  explicit UnitIdeal(const std::string& w = "operation requires a proper ideal")
      : Error(ErrorKind::HypothesisViolation, w) {}
};

struct NotMPrimary : Error {
  explicit NotMPrimary(const std::string& w = "ideal is not M-primary")
      : Error(ErrorKind::HypothesisViolation, w) {}
};

// Raised when the base-point recursion meets a positive-dimensional
// cosupport on an exceptional divisor.  `path` is the chart path from the
// root to the offending node, `direction` the coordinate axis whose pure
// power is missing.
struct NotFinitelySupported : Error {
  NotFinitelySupported(std::vector<int> path_, int direction_)
      : Error(ErrorKind::HypothesisViolation, "ideal is not finitely supported"),
        path(std::move(path_)), direction(direction_) {}
  std::vector<int> path;
  int direction;
};

struct DepthExceeded : Error {
  explicit DepthExceeded(int limit)
      : Error(ErrorKind::Resource,
              "constellation recursion exceeded depth " + std::to_string(limit)) {}
};

struct BoxTooLarge : Error {
  explicit BoxTooLarge(const std::string& w = "enumeration box exceeds the size guard")
      : Error(ErrorKind::Resource, w) {}
};

struct NotZeroDimensional : Error {
  NotZeroDimensional()
      : Error(ErrorKind::HypothesisViolation,
              "leading-term ideal lacks a pure power of some variable") {}
};

struct DegreeBlowup : Error {
  explicit DegreeBlowup(int limit)
      : Error(ErrorKind::Resource,
              "Groebner computation exceeded total degree " + std::to_string(limit)) {}
};

struct InsufficientData : Error {
  explicit InsufficientData(const std::string& w)
      : Error(ErrorKind::Usage, w) {}
};

struct NotContained : Error {
  explicit NotContained(const std::string& w = "candidate reduction is not contained in the closure")
      : Error(ErrorKind::HypothesisViolation, w) {}
};

struct WrongGeneratorCount : Error {
  explicit WrongGeneratorCount(const std::string& w = "reduction candidate must have exactly d generators")
      : Error(ErrorKind::Usage, w) {}
};

struct NonPolynomialTail : Error {
  NonPolynomialTail()
      : Error(ErrorKind::MathFailure,
              "fiber-cone numerator did not stabilize at the sampled range") {}
};

struct ParseError : Error {
  ParseError(int line_, int col_, const std::string& msg)
      : Error(ErrorKind::Usage,
              "parse error at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
        line(line_), col(col_) {}
  int line;
  int col;
};

} // namespace cideal

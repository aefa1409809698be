#pragma once

#include <stdexcept>
#include <string>

namespace qlmass {

// Failure taxonomy shared by all modules. Callers that need to branch on the
// cause catch Error and switch on kind(); everything derives from
// std::runtime_error so generic handlers keep working.
enum class ErrorKind {
  InvalidParameter,
  NumericalDomain,
  OutOfRange,
  GridMismatch,
  NotRevolutionEmbeddable,
  PositiveCurvatureViolation,
  LinearSolveFailure,
  DegenerateMeasurement,
  NotSpacelike,
  SolverFailure,
  MaximumPrincipleViolation,
  UnsupportedMetric,
  InternalConsistency,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::NumericalDomain: return "numerical-domain";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::GridMismatch: return "grid-mismatch";
    case ErrorKind::NotRevolutionEmbeddable: return "not-revolution-embeddable";
    case ErrorKind::PositiveCurvatureViolation: return "positive-curvature-violation";
    case ErrorKind::LinearSolveFailure: return "linear-solve-failure";
    case ErrorKind::DegenerateMeasurement: return "degenerate-measurement";
    case ErrorKind::NotSpacelike: return "not-spacelike";
    case ErrorKind::SolverFailure: return "solver-failure";
    case ErrorKind::MaximumPrincipleViolation: return "maximum-principle-violation";
    case ErrorKind::UnsupportedMetric: return "unsupported-metric";
    case ErrorKind::InternalConsistency: return "internal-consistency";
  }
  return "unknown";
}

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) {
  throw Error(k, std::string(to_string(k)) + ": " + msg);
}

inline void require(bool cond, ErrorKind k, const std::string& msg) {
  if (!cond) fail(k, msg);
}

}  // namespace qlmass

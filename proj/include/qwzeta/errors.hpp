#ifndef QWZETA_ERRORS_HPP
#define QWZETA_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qwzeta {

enum class ErrorKind {
  kMalformedGraph,
  kNotConnected,
  kDimensionMismatch,
  kNumericalFailure,
  kBadSeriesBase,
  kBadState,
  kSwapOrFactor,
  kLimitExceeded,
  kInsufficientEnumeration,
  kBranchCutViolation,
  kQuadratureNotConverged,
  kHypothesisViolation,
  kInvalidParameter,
  kParse,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code mapping) can dispatch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedGraph: return "MalformedGraph";
    case ErrorKind::kNotConnected: return "NotConnected";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kNumericalFailure: return "NumericalFailure";
    case ErrorKind::kBadSeriesBase: return "BadSeriesBase";
    case ErrorKind::kBadState: return "BadState";
    case ErrorKind::kSwapOrFactor: return "SwapOrFactorError";
    case ErrorKind::kLimitExceeded: return "LimitExceeded";
    case ErrorKind::kInsufficientEnumeration: return "InsufficientEnumeration";
    case ErrorKind::kBranchCutViolation: return "BranchCutViolation";
    case ErrorKind::kQuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorKind::kHypothesisViolation: return "HypothesisViolation";
    case ErrorKind::kInvalidParameter: return "InvalidParameter";
    case ErrorKind::kParse: return "ParseError";
  }
  return "Unknown";
}

}  // namespace qwzeta

#endif  // QWZETA_ERRORS_HPP

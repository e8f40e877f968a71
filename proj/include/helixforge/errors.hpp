#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace helixforge {

enum class ErrorKind {
  DivisionByZero,
  DiscriminantMismatch,
  BothZero,
  PoleAtParameter,
  DegenerateIndicatrix,
  DenominatorRootInDomain,
  DependentTangentField,
  OracleDegenerate,
  ZeroSpeedCurve,
  NotPythagorean,
  NotHelical,
  PlanarCurve,
  DegenerateAngle,
  CuspDetected,
  NotCoprime,
  PoleTangent,
  NoPositiveWeights,
  SystemSingular,
  RemezStagnation,
  CuspInInterval,
  DomainMismatch,
  SingularPoint,
  Schema,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Exception type for every kernel failure. The kind is what callers switch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Non-fatal condition attached to a result (cusps, zero speed, non-PH input...).
struct Warning {
  ErrorKind kind;
  std::string detail;
};

using Warnings = std::vector<Warning>;

inline bool has_warning(const Warnings& ws, ErrorKind kind) {
  for (const auto& w : ws)
    if (w.kind == kind) return true;
  return false;
}

}  // namespace helixforge

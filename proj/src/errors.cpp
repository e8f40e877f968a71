#include "helixforge/errors.hpp"

namespace helixforge {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DiscriminantMismatch: return "DiscriminantMismatch";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::PoleAtParameter: return "PoleAtParameter";
    case ErrorKind::DegenerateIndicatrix: return "DegenerateIndicatrix";
    case ErrorKind::DenominatorRootInDomain: return "DenominatorRootInDomain";
    case ErrorKind::DependentTangentField: return "DependentTangentField";
    case ErrorKind::OracleDegenerate: return "OracleDegenerate";
    case ErrorKind::ZeroSpeedCurve: return "ZeroSpeedCurve";
    case ErrorKind::NotPythagorean: return "NotPythagorean";
    case ErrorKind::NotHelical: return "NotHelical";
    case ErrorKind::PlanarCurve: return "PlanarCurve";
    case ErrorKind::DegenerateAngle: return "DegenerateAngle";
    case ErrorKind::CuspDetected: return "CuspDetected";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::PoleTangent: return "PoleTangent";
    case ErrorKind::NoPositiveWeights: return "NoPositiveWeights";
    case ErrorKind::SystemSingular: return "SystemSingular";
    case ErrorKind::RemezStagnation: return "RemezStagnation";
    case ErrorKind::CuspInInterval: return "CuspInInterval";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::Schema: return "Schema";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace helixforge

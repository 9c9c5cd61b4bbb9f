#include "nervekit/error.hpp"

namespace nervekit {

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::DanglingId: return "DanglingId";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotAnAction: return "NotAnAction";
    case ErrorKind::MismatchedTarget: return "MismatchedTarget";
    case ErrorKind::UnknownObject: return "UnknownObject";
    case ErrorKind::InsufficientTruncation: return "InsufficientTruncation";
    case ErrorKind::UnknownBasepoint: return "UnknownBasepoint";
    case ErrorKind::NonFreeAction: return "NonFreeAction";
    case ErrorKind::LevelInactive: return "LevelInactive";
    case ErrorKind::NotSameOrbit: return "NotSameOrbit";
    case ErrorKind::C1Violation: return "C1Violation";
    case ErrorKind::C2Violation: return "C2Violation";
    case ErrorKind::M1Violation: return "M1Violation";
    case ErrorKind::M2Violation: return "M2Violation";
    case ErrorKind::TorsorViolation: return "TorsorViolation";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidClass: return "InvalidClass";
    case ErrorKind::OracleMissing: return "OracleMissing";
    case ErrorKind::HypothesisFails: return "HypothesisFails";
    case ErrorKind::NotALimit: return "NotALimit";
    case ErrorKind::NotFComplete: return "NotFComplete";
    case ErrorKind::BijectionFailure: return "BijectionFailure";
    case ErrorKind::NoFinalObject: return "NoFinalObject";
    case ErrorKind::NotFunctorial: return "NotFunctorial";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string witness)
    : std::runtime_error(std::string(kind_name(kind)) + ": " + witness),
      kind_(kind),
      witness_(std::move(witness)) {}

}  // namespace nervekit

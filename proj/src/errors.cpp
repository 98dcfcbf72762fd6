#include "orbitrig/errors.hpp"

namespace orbitrig {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidMatrix: return "InvalidMatrix";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidGenerator: return "InvalidGenerator";
    case ErrorKind::GroupNotFinite: return "GroupNotFinite";
    case ErrorKind::InconsistentConfiguration: return "InconsistentConfiguration";
    case ErrorKind::InconsistentPlacement: return "InconsistentPlacement";
    case ErrorKind::AmbiguousPlacement: return "AmbiguousPlacement";
    case ErrorKind::SamplingFailed: return "SamplingFailed";
    case ErrorKind::DegenerateEdge: return "DegenerateEdge";
    case ErrorKind::InvalidAssignment: return "InvalidAssignment";
    case ErrorKind::NotASelfStress: return "NotASelfStress";
    case ErrorKind::Validation: return "Validation";
    case ErrorKind::Schema: return "Schema";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

const char* to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::Structure: return "structure";
    case Violation::Kind::Automorphism: return "automorphism";
    case Violation::Kind::Homomorphism: return "homomorphism";
    case Violation::Kind::Equivariance: return "equivariance";
    case Violation::Kind::NonInjective: return "non-injective";
  }
  return "unknown";
}

namespace {
std::string summarize(const std::vector<Violation>& violations) {
  std::string out = "framework validation failed";
  for (const auto& v : violations) {
    out += "\n  [";
    out += to_string(v.kind);
    out += "] ";
    out += v.message;
  }
  return out;
}
}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(ErrorKind::Validation, summarize(violations)),
      violations_(std::move(violations)) {}

}  // namespace orbitrig

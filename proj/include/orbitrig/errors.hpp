#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace orbitrig {

enum class ErrorKind {
  InvalidMatrix,
  DimensionMismatch,
  InvalidGenerator,
  GroupNotFinite,
  InconsistentConfiguration,
  InconsistentPlacement,
  AmbiguousPlacement,
  SamplingFailed,
  DegenerateEdge,
  InvalidAssignment,
  NotASelfStress,
  Validation,
  Schema,
  Unsupported,
  UnknownName,
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// One failed check found while validating a symmetric framework.
struct Violation {
  enum class Kind { Structure, Automorphism, Homomorphism, Equivariance, NonInjective };
  Kind kind;
  std::string message;
  int element = -1;   // group element index, -1 if not applicable
  int vertex = -1;    // 1-based
  int edge_u = -1;    // 1-based endpoints of the offending edge
  int edge_v = -1;
  double residual = 0.0;
};

const char* to_string(Violation::Kind kind);

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

}  // namespace orbitrig

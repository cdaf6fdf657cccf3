#pragma once

#include <stdexcept>
#include <string>

namespace bour {

enum class ErrorKind {
  ExcludedExponent,      // family value m in {-1, 0, 1}
  BranchDomain,          // fractional power of a non-positive argument
  SingularPoint,         // parametrization degenerates (det I = 0 locus)
  DegenerateNormal,      // lightlike or vanishing normal, cannot normalize
  PathThroughSingularity,// integration path meets the branch point
  DomainEdge,            // finite-difference stencil leaves the patch domain
  EmptyRealizableDomain, // branch clipping removed every sample point
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::ExcludedExponent:       return "ExcludedExponent";
    case ErrorKind::BranchDomain:           return "BranchDomain";
    case ErrorKind::SingularPoint:          return "SingularPoint";
    case ErrorKind::DegenerateNormal:       return "DegenerateNormal";
    case ErrorKind::PathThroughSingularity: return "PathThroughSingularity";
    case ErrorKind::DomainEdge:             return "DomainEdge";
    case ErrorKind::EmptyRealizableDomain:  return "EmptyRealizableDomain";
  }
  return "Unknown";
}

/// Raised by evaluators when an input violates a documented precondition.
/// The kind name is embedded in what() so callers (and the CLI) can report it.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& detail)
      : std::runtime_error("IoFailure: " + detail) {}
};

}  // namespace bour

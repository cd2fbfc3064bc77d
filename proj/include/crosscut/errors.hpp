#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace crosscut {

enum class ErrorKind {
  CoincidentPoints,
  ParallelLines,
  DegenerateFrame,
  NotConvex,
  ZeroArea,
  ZeroDenominator,
  DomainError,
  IdentityFailed,
  LocusViolation,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI) can report which invariant broke.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::ParallelLines: return "ParallelLines";
    case ErrorKind::DegenerateFrame: return "DegenerateFrame";
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::ZeroArea: return "ZeroArea";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::IdentityFailed: return "IdentityFailed";
    case ErrorKind::LocusViolation: return "LocusViolation";
  }
  return "Unknown";
}

}  // namespace crosscut

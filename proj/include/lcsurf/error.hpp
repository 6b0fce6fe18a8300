#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcsurf {

enum class ErrorKind {
  SingularMatrix,
  DimensionMismatch,
  InvalidSurface,
  InvalidCluster,
  InconsistentFlags,
  NotNonExceptional,
  RejectNonNegativeSelfInt,
  RejectKDeltaNonNegative,
  RejectClusterDegenerate,
  InconsistentWithTheorem84,
  NotOrthogonal,
  LedgerDependence,
  MissingRestriction,
  InvalidRestriction,
  BadSite,
  UnknownName,
  ParseError,
  ValidationError,
};

std::string_view to_string(ErrorKind kind);

// Every engine failure is reported through this type; `kind` is stable and
// machine-readable, `what()` carries the human detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// ParseError / ValidationError raised by the document reader carry the
// 1-based line number of the offending input line (0 when not applicable).
class DocumentError : public Error {
 public:
  DocumentError(ErrorKind kind, std::size_t line, const std::string& message)
      : Error(kind, message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace lcsurf

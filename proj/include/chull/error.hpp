#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chull {

enum class ErrorCode {
  NotDivisible,
  NonSquare,
  DegreeZero,
  ResourceLimit,
  NotZeroDimensional,
  DegreeCapExceeded,
  NotHomogeneous,
  DegenerateSpec,
  NotSymmetric,
  NotInInvariantRing,
  ZeroDeterminant,
  NonPrincipal,
  DegeneratePencil,
  DegreeMismatch,
  ChartFailure,
  InvalidProfile,
  RingMismatch,
  ExponentOverflow,
  Parse,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map them to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures remember where they happened (1-based).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(ErrorCode::Parse, what + " at line " + std::to_string(line) + ", column " +
                                    std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace chull

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rlpc {

enum class ErrorKind {
  EmptyOrSingleton,
  NonPositiveWeight,
  NotNormalized,
  ParseError,
  IndexOutOfRange,
  SizeMismatch,
  Infeasible,
  KraftViolation,
  CorruptGrid,
  NotIncreasing,
  BadParameter,
  TooLarge,
  Truncated,
  InvalidCode,
  UsageError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure the library reports carries one of the kinds above so callers
// (the CLI in particular) can map it to a diagnostic without string matching.
class CodingError : public std::runtime_error {
 public:
  CodingError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw CodingError(kind, what); }

}  // namespace rlpc

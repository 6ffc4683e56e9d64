#include "rlpc/error.hpp"

namespace rlpc {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyOrSingleton: return "EmptyOrSingleton";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::KraftViolation: return "KraftViolation";
    case ErrorKind::CorruptGrid: return "CorruptGrid";
    case ErrorKind::NotIncreasing: return "NotIncreasing";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Truncated: return "Truncated";
    case ErrorKind::InvalidCode: return "InvalidCode";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Unknown";
}

}  // namespace rlpc

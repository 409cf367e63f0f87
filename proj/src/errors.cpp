#include "bog/errors.hpp"

namespace bog {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SymbolTableMismatch: return "SymbolTableMismatch";
    case ErrorCode::NotInSubgroup: return "NotInSubgroup";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UndeclaredSymbol: return "UndeclaredSymbol";
    case ErrorCode::InvalidMultiplicity: return "InvalidMultiplicity";
    case ErrorCode::ConflictingFlags: return "ConflictingFlags";
    case ErrorCode::Usage: return "Usage";
    case ErrorCode::TailUsesSubstitutedLetter: return "TailUsesSubstitutedLetter";
    case ErrorCode::SubgroupMismatch: return "SubgroupMismatch";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::ExpressFailure: return "ExpressFailure";
    case ErrorCode::InfiniteImage: return "InfiniteImage";
    case ErrorCode::IndeterminateInfinity: return "IndeterminateInfinity";
    case ErrorCode::UnsupportedPattern: return "UnsupportedPattern";
    case ErrorCode::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorCode::NotPeriodic: return "NotPeriodic";
    case ErrorCode::NotAlmostPeriodic: return "NotAlmostPeriodic";
    case ErrorCode::SizeGuard: return "SizeGuard";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnboundSymbol: return "UnboundSymbol";
    case ErrorCode::UnknownRepresentation: return "UnknownRepresentation";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

bool Error::is_input_error() const noexcept {
  switch (code_) {
    case ErrorCode::ParseError:
    case ErrorCode::UndeclaredSymbol:
    case ErrorCode::InvalidMultiplicity:
    case ErrorCode::ConflictingFlags:
    case ErrorCode::Usage:
      return true;
    default:
      return false;
  }
}

ParseError::ParseError(ErrorCode code, std::size_t line, std::size_t column,
                       const std::string& message)
    : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " +
                      message),
      line_(line),
      column_(column),
      detail_(message) {}

}  // namespace bog

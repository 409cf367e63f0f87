#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bog {

enum class ErrorCode {
  // circle
  SymbolTableMismatch,
  NotInSubgroup,
  // spec-file frontend; everything in this group maps to exit code 2
  ParseError,
  UndeclaredSymbol,
  InvalidMultiplicity,
  ConflictingFlags,
  Usage,
  // words
  TailUsesSubstitutedLetter,
  SubgroupMismatch,
  SizeMismatch,
  ExpressFailure,
  InfiniteImage,
  // freedim
  IndeterminateInfinity,
  UnsupportedPattern,
  InvalidDescriptor,
  NotPeriodic,
  // presentation
  NotAlmostPeriodic,
  // freeprob
  SizeGuard,
  DimensionMismatch,
  UnboundSymbol,
  // cli
  UnknownRepresentation,
  Io,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for errors that originate in reading user input rather than in the
  /// mathematics.
  bool is_input_error() const noexcept;

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, std::size_t column,
             const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

}  // namespace bog

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bog/rep.hpp"

namespace bog {

struct SpecFile {
  SymbolTable symbols;
  std::vector<Representation> reps;

  /// Throws UnknownRepresentation.
  const Representation& find(const std::string& name) const;
};

/// Line-oriented spec grammar:
///
///   symbol NAME
///   rep NAME { STATEMENT ... }
///   STATEMENT := atom ANGLE mult (INT|inf)
///              | wm KIND [mult INT] [flags FLAG[,FLAG...]]
///   KIND      := left_regular | singular_closed | atomless
///   FLAG      := mixing | mildly_mixing | rigid
///
/// Statements end at a newline or `;`, `#` starts a comment. ANGLE is a circle
/// literal, with `1` for the trivial eigenvalue and `-1` for the half turn.
/// Errors are ParseError with 1-based line and column.
SpecFile parse_specfile(std::string_view text);

/// Parses a spec holding exactly one representation, or a bare statement list
/// (symbols are then declared implicitly).
Representation parse_rep(std::string_view text);

/// The grammar summary above, printed on usage errors.
const char* grammar_excerpt();

}  // namespace bog

#pragma once

#include "hlpg/model.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hlpg {

struct ParseDiagnostic {
  int line = 0, col = 0; // 1-based; 0 when no source position applies
  Severity severity = Severity::Error;
  std::string message;

  std::string text() const; // "12:3: error: ..." or "error: ..."
};

struct ParseResult {
  // present when the source parsed; semantic errors land in diagnostics
  std::optional<HighLevelGame> game;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const; // parsed and free of error-severity diagnostics
};

// Parses game source and, when syntactically whole, appends structural
// validation and type discipline diagnostics.
ParseResult parse_game(std::string_view source);

// Canonical source text: one declaration per line, blank lines between
// sections, single-line transitions. parse_game(print_game(g)) rebuilds g
// exactly, and printing a parsed canonical file reproduces its bytes.
std::string print_game(const HighLevelGame& game);

} // namespace hlpg

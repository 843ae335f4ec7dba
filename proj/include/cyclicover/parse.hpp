#pragma once

#include <optional>
#include <string>

#include "cyclicover/errors.hpp"
#include "cyclicover/presentation.hpp"

namespace cyclicover {

struct ParsedPresentation {
  Presentation presentation;
  std::optional<CyclicClass> phi;
  // Set when a phi block is present but not primitive (warning, not error).
  bool phi_not_primitive = false;
};

/// Parses the presentation file grammar:
///   gens: <id> <id> ...
///   rels: <word> [, <word>]*          (may be empty after the colon)
///   phi: <id>=<int> ...               (optional; must cover every generator)
/// Words are <id> or <id>^<int> tokens separated by spaces or '*';
/// '#' starts a comment; '1' denotes the empty word.
/// Throws ParseError with 1-based line/column on malformed input,
/// undeclared generators, or a phi block that is not a homomorphism.
ParsedPresentation parse_presentation(const std::string &text);

} // namespace cyclicover

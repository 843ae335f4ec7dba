#pragma once

#include <stdexcept>
#include <string>

namespace cyclicover {

// Input text could not be parsed. Positions are 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, int col, const std::string &what)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + what),
        line(line), col(col) {}
  int line;
  int col;
};

// A computation was refused because it exceeds a configured size cap.
class SizeLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace cyclicover

#include "cyclicover/parse.hpp"

#include <cctype>
#include <map>
#include <set>
#include <vector>

namespace cyclicover {

namespace {

struct Cursor {
  const std::string &text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  // Skips spaces, tabs and comments, not newlines.
  void skip_inline() {
    while (!eof()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '#') {
        while (!eof() && peek() != '\n')
          advance();
      } else {
        break;
      }
    }
  }

  void skip_blank_lines() {
    while (!eof()) {
      skip_inline();
      if (!eof() && peek() == '\n')
        advance();
      else
        break;
    }
  }

  [[noreturn]] void fail(const std::string &msg) const { throw ParseError(line, col, msg); }
};

bool is_id_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_id_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string read_id(Cursor &cur) {
  if (cur.eof() || !is_id_start(cur.peek()))
    cur.fail("expected identifier");
  std::string id;
  while (!cur.eof() && is_id_char(cur.peek())) {
    id += cur.peek();
    cur.advance();
  }
  return id;
}

std::int64_t read_int(Cursor &cur) {
  bool neg = false;
  if (!cur.eof() && (cur.peek() == '-' || cur.peek() == '+')) {
    neg = cur.peek() == '-';
    cur.advance();
  }
  if (cur.eof() || !std::isdigit(static_cast<unsigned char>(cur.peek())))
    cur.fail("expected integer");
  std::int64_t v = 0;
  while (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    if (v > 1'000'000'000'000'000)
      cur.fail("integer too large");
    v = v * 10 + (cur.peek() - '0');
    cur.advance();
  }
  return neg ? -v : v;
}

void expect_keyword(Cursor &cur, const std::string &kw) {
  cur.skip_blank_lines();
  for (char c : kw) {
    if (cur.eof() || cur.peek() != c)
      cur.fail("expected '" + kw + "'");
    cur.advance();
  }
}

bool at_line_end(Cursor &cur) {
  cur.skip_inline();
  return cur.eof() || cur.peek() == '\n';
}

// One word: id or id^int tokens separated by spaces or '*'. '1' = identity.
FreeWord read_word(Cursor &cur, const std::set<std::string> &declared) {
  std::vector<Letter> letters;
  bool first = true;
  while (true) {
    cur.skip_inline();
    if (cur.eof() || cur.peek() == '\n' || cur.peek() == ',')
      break;
    if (cur.peek() == '*') {
      cur.advance();
      continue;
    }
    if (first && cur.peek() == '1') {
      cur.advance();
      continue;
    }
    int line = cur.line, col = cur.col;
    std::string id = read_id(cur);
    if (!declared.count(id))
      throw ParseError(line, col, "undeclared generator: " + id);
    std::int64_t exp = 1;
    if (!cur.eof() && cur.peek() == '^') {
      cur.advance();
      exp = read_int(cur);
    }
    letters.push_back({id, exp});
    first = false;
  }
  return FreeWord::from_letters(letters);
}

} // namespace

ParsedPresentation parse_presentation(const std::string &text) {
  Cursor cur{text};

  expect_keyword(cur, "gens:");
  std::vector<std::string> gens;
  std::set<std::string> declared;
  while (!at_line_end(cur)) {
    int line = cur.line, col = cur.col;
    std::string id = read_id(cur);
    if (!declared.insert(id).second)
      throw ParseError(line, col, "generator declared twice: " + id);
    gens.push_back(id);
  }
  if (gens.empty())
    cur.fail("at least one generator is required");

  expect_keyword(cur, "rels:");
  std::vector<FreeWord> rels;
  if (!at_line_end(cur)) {
    while (true) {
      rels.push_back(read_word(cur, declared));
      cur.skip_inline();
      if (!cur.eof() && cur.peek() == ',') {
        cur.advance();
        continue;
      }
      break;
    }
  }

  ParsedPresentation out;
  out.presentation = Presentation(gens, rels);

  cur.skip_blank_lines();
  if (!cur.eof()) {
    expect_keyword(cur, "phi:");
    std::map<std::string, std::int64_t> values;
    while (!at_line_end(cur)) {
      int line = cur.line, col = cur.col;
      std::string id = read_id(cur);
      if (!declared.count(id))
        throw ParseError(line, col, "undeclared generator: " + id);
      if (values.count(id))
        throw ParseError(line, col, "value assigned twice: " + id);
      cur.skip_inline();
      if (cur.eof() || cur.peek() != '=')
        cur.fail("expected '='");
      cur.advance();
      cur.skip_inline();
      values[id] = read_int(cur);
    }
    int phi_line = cur.line;
    for (const auto &g : gens)
      if (!values.count(g))
        throw ParseError(phi_line, 1, "phi must list every generator; missing: " + g);
    CyclicClass phi(values);
    for (const auto &r : out.presentation.relators())
      if (phi.of_word(r) != 0)
        throw ParseError(phi_line, 1,
                         "phi is not a homomorphism: relator '" + r.str() +
                             "' maps to " + std::to_string(phi.of_word(r)));
    out.phi_not_primitive = !phi.is_primitive();
    out.phi = std::move(phi);
    cur.skip_blank_lines();
    if (!cur.eof())
      cur.fail("unexpected trailing input");
  }
  return out;
}

} // namespace cyclicover

#include "foxhom/presentation.hpp"

#include <cctype>
#include <limits>
#include <set>
#include <sstream>

namespace foxhom {

int Presentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i] == name) return static_cast<int>(i);
  }
  return -1;
}

void validate(const Presentation& p) {
  std::set<std::string> seen;
  for (const std::string& g : p.generators) {
    if (!seen.insert(g).second) {
      throw Error(ErrorKind::SyntaxError, "duplicate generator '" + g + "'");
    }
  }
  const int n = static_cast<int>(p.generators.size());
  for (const Word& r : p.relators) {
    for (const Syllable& s : r.syllables()) {
      if (s.gen < 0 || s.gen >= n) {
        throw Error(ErrorKind::UnknownGenerator, "relator references generator index " +
                                                     std::to_string(s.gen) + " out of range");
      }
    }
  }
}

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1;
  int column = 1;

  explicit Cursor(const std::string& t) : text(t) {}

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  char advance() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    return c;
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail(ErrorKind kind, const std::string& msg) const {
    throw ParseError(kind, msg + " at " + std::to_string(line) + ":" + std::to_string(column),
                     line, column);
  }
};

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string read_ident(Cursor& cur) {
  std::string out;
  out.push_back(cur.advance());
  while (!cur.eof() && is_ident_char(cur.peek())) out.push_back(cur.advance());
  return out;
}

std::int64_t read_exponent(Cursor& cur) {
  cur.skip_ws();
  if (cur.eof()) cur.fail(ErrorKind::MalformedExponent, "missing exponent after '^'");
  bool negative = false;
  if (cur.peek() == '-' || cur.peek() == '+') negative = cur.advance() == '-';
  cur.skip_ws();
  if (cur.eof() || !std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    cur.fail(ErrorKind::MalformedExponent, "exponent is not an integer");
  }
  std::int64_t value = 0;
  while (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    int digit = cur.advance() - '0';
    if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10) {
      cur.fail(ErrorKind::MalformedExponent, "exponent out of range");
    }
    value = value * 10 + digit;
  }
  if (value == 0) cur.fail(ErrorKind::MalformedExponent, "zero exponent");
  return negative ? -value : value;
}

Word read_word(Cursor& cur, const Presentation& p) {
  std::vector<Syllable> raw;
  bool saw_term = false;
  while (true) {
    cur.skip_ws();
    if (cur.eof()) cur.fail(ErrorKind::SyntaxError, "unterminated presentation");
    char c = cur.peek();
    if (c == ',' || c == '>' || c == '|') break;
    if (c == '1' && !saw_term) {
      // identity word; must stand alone
      cur.advance();
      cur.skip_ws();
      if (!cur.eof() && cur.peek() != ',' && cur.peek() != '>') {
        cur.fail(ErrorKind::SyntaxError, "'1' must be the entire word");
      }
      return Word();
    }
    if (!is_ident_start(c)) cur.fail(ErrorKind::SyntaxError, "unexpected character in word");
    int l = cur.line, col = cur.column;
    std::string name = read_ident(cur);
    int gen = p.generator_index(name);
    if (gen < 0) {
      throw ParseError(ErrorKind::UnknownGenerator,
                       "unknown generator '" + name + "' at " + std::to_string(l) + ":" +
                           std::to_string(col),
                       l, col);
    }
    std::int64_t exp = 1;
    cur.skip_ws();
    if (!cur.eof() && cur.peek() == '^') {
      cur.advance();
      exp = read_exponent(cur);
    }
    raw.push_back({gen, exp});
    saw_term = true;
  }
  if (!saw_term) cur.fail(ErrorKind::SyntaxError, "empty word");
  return Word::from_syllables(std::move(raw));
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Cursor cur(text);
  cur.skip_ws();
  if (cur.eof() || cur.peek() != '<') cur.fail(ErrorKind::SyntaxError, "expected '<'");
  cur.advance();

  Presentation p;
  while (true) {
    cur.skip_ws();
    if (cur.eof()) cur.fail(ErrorKind::SyntaxError, "unterminated generator list");
    if (!is_ident_start(cur.peek())) {
      cur.fail(ErrorKind::SyntaxError, "expected generator name");
    }
    int l = cur.line, col = cur.column;
    std::string name = read_ident(cur);
    if (p.generator_index(name) >= 0) {
      throw ParseError(ErrorKind::SyntaxError,
                       "duplicate generator '" + name + "' at " + std::to_string(l) + ":" +
                           std::to_string(col),
                       l, col);
    }
    p.generators.push_back(std::move(name));
    cur.skip_ws();
    if (cur.eof()) cur.fail(ErrorKind::SyntaxError, "unterminated generator list");
    if (cur.peek() == ',') {
      cur.advance();
      continue;
    }
    if (cur.peek() == '|') {
      cur.advance();
      break;
    }
    cur.fail(ErrorKind::SyntaxError, "expected ',' or '|'");
  }

  cur.skip_ws();
  if (cur.eof()) cur.fail(ErrorKind::SyntaxError, "unbalanced '<'");
  if (cur.peek() != '>') {
    while (true) {
      p.relators.push_back(read_word(cur, p));
      cur.skip_ws();
      if (cur.eof()) cur.fail(ErrorKind::SyntaxError, "unbalanced '<'");
      if (cur.peek() == ',') {
        cur.advance();
        continue;
      }
      if (cur.peek() == '>') break;
      cur.fail(ErrorKind::SyntaxError, "expected ',' or '>'");
    }
  }
  cur.advance();  // '>'
  cur.skip_ws();
  if (!cur.eof()) cur.fail(ErrorKind::SyntaxError, "trailing input after '>'");
  validate(p);
  return p;
}

std::string to_string(const Presentation& p, const Word& w) {
  if (w.is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Syllable& s : w.syllables()) {
    if (!first) os << ' ';
    first = false;
    os << p.generators[static_cast<std::size_t>(s.gen)];
    if (s.exp != 1) os << '^' << s.exp;
  }
  return os.str();
}

std::string to_string(const Presentation& p) {
  std::ostringstream os;
  os << "< ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) os << ", ";
    os << p.generators[i];
  }
  os << " |";
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    os << (j ? ", " : " ") << to_string(p, p.relators[j]);
  }
  os << " >";
  return os.str();
}

IntMatrix abelianized_relator_matrix(const Presentation& p) {
  IntMatrix a(p.generators.size(), p.relators.size());
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    for (const Syllable& s : p.relators[j].syllables()) {
      a.at(static_cast<std::size_t>(s.gen), j) += s.exp;
    }
  }
  return a;
}

}  // namespace foxhom

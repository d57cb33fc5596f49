#pragma once

#include <stdexcept>
#include <string>

namespace foxhom {

enum class ErrorKind {
  SyntaxError,
  UnknownGenerator,
  MalformedExponent,
  Overflow,
  NotCyclicallyReduced,
  TooLarge,
  InsufficientFreeRank,
  NotOneRelator,
  RelatorNotKilled,
  NotTransitive,
  DegenerateParameters,
  PreconditionFailed,
};

const char* to_string(ErrorKind kind);

// Domain error. Parse failures use the ParseError subclass, which carries a
// 1-based line/column into the offending text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string& message, int line, int column);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// Parse-category kinds map to CLI exit code 2, everything else to 1.
bool is_parse_kind(ErrorKind kind) noexcept;

}  // namespace foxhom

#include "foxhom/errors.hpp"

namespace foxhom {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::MalformedExponent: return "MalformedExponent";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotCyclicallyReduced: return "NotCyclicallyReduced";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InsufficientFreeRank: return "InsufficientFreeRank";
    case ErrorKind::NotOneRelator: return "NotOneRelator";
    case ErrorKind::RelatorNotKilled: return "RelatorNotKilled";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::DegenerateParameters: return "DegenerateParameters";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

ParseError::ParseError(ErrorKind kind, const std::string& message, int line, int column)
    : Error(kind, message), line_(line), column_(column) {}

bool is_parse_kind(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownGenerator:
    case ErrorKind::MalformedExponent:
      return true;
    default:
      return false;
  }
}

}  // namespace foxhom

#include "doctest.h"

#include "foxhom/presentation.hpp"

using namespace foxhom;

TEST_CASE("parses the standard forms") {
  Presentation p = parse_presentation("< a, t | t a^2 t^-1 a^-4 >");
  REQUIRE(p.generators == std::vector<std::string>{"a", "t"});
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0] ==
        Word::from_syllables({{1, 1}, {0, 2}, {1, -1}, {0, -4}}));

  Presentation free1 = parse_presentation("< a | >");
  CHECK(free1.generators.size() == 1);
  CHECK(free1.relators.empty());

  // adjacent same-generator terms merge under free reduction
  Presentation merged = parse_presentation("< a, t | t a a t^-1 >");
  CHECK(merged.relators[0] == Word::from_syllables({{1, 1}, {0, 2}, {1, -1}}));

  // multiple relators, identity relator spelled "1"
  Presentation multi = parse_presentation("<x,y| x y x^-1 y^-1, 1, y^3>");
  CHECK(multi.relators.size() == 3);
  CHECK(multi.relators[1].is_identity());
}

TEST_CASE("whitespace is insignificant") {
  Presentation a = parse_presentation("<a,t|t a^2 t^-1 a^-4>");
  Presentation b = parse_presentation("  < a ,\n t |\t t a^ 2 t ^-1 a^-4 >  ");
  CHECK(a == b);
}

TEST_CASE("parse errors carry kind and position") {
  auto kind_of = [](const std::string& text) {
    try {
      (void)parse_presentation(text);
    } catch (const ParseError& e) {
      CHECK(e.line() >= 1);
      CHECK(e.column() >= 1);
      return e.kind();
    }
    return ErrorKind::PreconditionFailed;  // not reached
  };
  CHECK(kind_of("< a, t | t b >") == ErrorKind::UnknownGenerator);
  CHECK(kind_of("< a | a^0 >") == ErrorKind::MalformedExponent);
  CHECK(kind_of("< a | a^x >") == ErrorKind::MalformedExponent);
  CHECK(kind_of("< a | a^2") == ErrorKind::SyntaxError);
  CHECK(kind_of("a | a^2 >") == ErrorKind::SyntaxError);
  CHECK(kind_of("< a, a | >") == ErrorKind::SyntaxError);
  CHECK(kind_of("< a | a > junk") == ErrorKind::SyntaxError);
  CHECK(kind_of("< | a >") == ErrorKind::SyntaxError);
}

TEST_CASE("printing round-trips") {
  for (const char* text : {
           "< a, t | t a^2 t^-1 a^-4 >",
           "< a | >",
           "< x, y, z_2 | x y^-3 x, 1, z_2^7 >",
       }) {
    Presentation p = parse_presentation(text);
    CHECK(parse_presentation(to_string(p)) == p);
  }
}

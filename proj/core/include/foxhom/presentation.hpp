#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "foxhom/int_matrix.hpp"
#include "foxhom/word.hpp"

namespace foxhom {

// Finite group presentation < s_1, ..., s_n | r_1, ..., r_m >. Generator
// names are unique; relators are stored freely reduced. Zero generators and
// zero relators are both legal.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  int generator_index(std::string_view name) const;  // -1 if absent

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Checks name uniqueness and generator indices; throws on violation.
void validate(const Presentation& p);

// Grammar (whitespace insignificant):
//   presentation := "<" genlist "|" relatorlist ">"
//   genlist      := ident ("," ident)*
//   relatorlist  := empty | word ("," word)*
//   word         := "1" | term+
//   term         := ident ("^" int)?      -- int nonzero, may be negative
// "1" denotes the identity word so printed presentations always re-parse.
Presentation parse_presentation(const std::string& text);

std::string to_string(const Presentation& p);
std::string to_string(const Presentation& p, const Word& w);

// n x m matrix over generators (rows) and relators (columns); entry (i, j)
// is the total exponent sum of generator i in relator j.
IntMatrix abelianized_relator_matrix(const Presentation& p);

}  // namespace foxhom

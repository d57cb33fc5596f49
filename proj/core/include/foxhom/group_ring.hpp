#pragma once

#include <map>
#include <string>
#include <vector>

#include "foxhom/bigint.hpp"
#include "foxhom/presentation.hpp"
#include "foxhom/word.hpp"

namespace foxhom {

// Element of the integral group ring Z[F(S)]: a finite formal sum of freely
// reduced words with nonzero integer coefficients. The term map is ordered
// lexicographically on syllables so iteration and printing are stable.
class GroupRingElement {
 public:
  GroupRingElement() = default;  // zero

  static GroupRingElement of_word(const Word& w);
  static GroupRingElement constant(const BigInt& c);

  const std::map<Word, BigInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Sum of all coefficients.
  BigInt augmentation() const;

  void add_term(const Word& w, const BigInt& c);

  GroupRingElement operator-() const;
  friend GroupRingElement operator+(const GroupRingElement&, const GroupRingElement&);
  friend GroupRingElement operator-(const GroupRingElement&, const GroupRingElement&);
  friend GroupRingElement operator*(const GroupRingElement&, const GroupRingElement&);
  friend GroupRingElement operator*(const BigInt& c, const GroupRingElement& x);
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  std::map<Word, BigInt> terms_;
};

// Free-ring Fox derivative d w / d s_gen, computed by the product rule over
// syllables with the closed forms
//   d(s^e)/ds = 1 + s + ... + s^(e-1)          (e > 0)
//   d(s^e)/ds = -(s^-1 + s^-2 + ... + s^e)     (e < 0).
GroupRingElement fox_derivative(const Word& w, int gen);

// entries[i][j] = d r_i / d s_j (relator-major grid).
struct Jacobian {
  std::size_t relator_count = 0;
  std::size_t generator_count = 0;
  std::vector<std::vector<GroupRingElement>> entries;

  const GroupRingElement& entry(std::size_t relator, std::size_t gen) const {
    return entries[relator][gen];
  }
};

Jacobian fox_jacobian(const Presentation& p);

// "1 + a + a^2 - t^2*a" style rendering with generator names from p.
std::string to_string(const GroupRingElement& x, const Presentation& p);

}  // namespace foxhom

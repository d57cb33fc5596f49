#include "foxhom/group_ring.hpp"

#include <sstream>

namespace foxhom {

GroupRingElement GroupRingElement::of_word(const Word& w) {
  GroupRingElement x;
  x.terms_.emplace(w, 1);
  return x;
}

GroupRingElement GroupRingElement::constant(const BigInt& c) {
  GroupRingElement x;
  if (c != 0) x.terms_.emplace(Word(), c);
  return x;
}

BigInt GroupRingElement::augmentation() const {
  BigInt total = 0;
  for (const auto& [w, c] : terms_) total += c;
  return total;
}

void GroupRingElement::add_term(const Word& w, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

GroupRingElement operator+(const GroupRingElement& x, const GroupRingElement& y) {
  GroupRingElement out = x;
  for (const auto& [w, c] : y.terms_) out.add_term(w, c);
  return out;
}

GroupRingElement operator-(const GroupRingElement& x, const GroupRingElement& y) {
  GroupRingElement out = x;
  for (const auto& [w, c] : y.terms_) out.add_term(w, -c);
  return out;
}

GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y) {
  GroupRingElement out;
  for (const auto& [u, cu] : x.terms_) {
    for (const auto& [v, cv] : y.terms_) {
      out.add_term(u * v, cu * cv);
    }
  }
  return out;
}

GroupRingElement operator*(const BigInt& c, const GroupRingElement& x) {
  GroupRingElement out;
  if (c == 0) return out;
  for (const auto& [w, coeff] : x.terms_) out.add_term(w, c * coeff);
  return out;
}

GroupRingElement fox_derivative(const Word& w, int gen) {
  GroupRingElement out;
  Word prefix;
  for (const Syllable& s : w.syllables()) {
    if (s.gen == gen) {
      if (s.exp > 0) {
        // prefix * (1 + s + ... + s^(e-1))
        for (std::int64_t j = 0; j < s.exp; ++j) {
          out.add_term(prefix * Word::generator(s.gen, j), 1);
        }
      } else {
        // prefix * -(s^-1 + ... + s^e)
        for (std::int64_t j = -1; j >= s.exp; --j) {
          out.add_term(prefix * Word::generator(s.gen, j), -1);
        }
      }
    }
    prefix = prefix * Word::generator(s.gen, s.exp);
  }
  return out;
}

Jacobian fox_jacobian(const Presentation& p) {
  Jacobian j;
  j.relator_count = p.relators.size();
  j.generator_count = p.generators.size();
  j.entries.resize(j.relator_count);
  for (std::size_t i = 0; i < j.relator_count; ++i) {
    j.entries[i].reserve(j.generator_count);
    for (std::size_t g = 0; g < j.generator_count; ++g) {
      j.entries[i].push_back(fox_derivative(p.relators[i], static_cast<int>(g)));
    }
  }
  return j;
}

std::string to_string(const GroupRingElement& x, const Presentation& p) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    BigInt mag = big_abs(c);
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (w.is_identity()) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    bool first_syl = true;
    for (const Syllable& s : w.syllables()) {
      if (!first_syl) os << '*';
      first_syl = false;
      os << p.generators[static_cast<std::size_t>(s.gen)];
      if (s.exp != 1) os << '^' << s.exp;
    }
  }
  return os.str();
}

}  // namespace foxhom

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "foxhom/bigint.hpp"
#include "foxhom/errors.hpp"

namespace foxhom {

// One maximal run of a single generator. The exponent is never zero.
struct Syllable {
  int gen = 0;
  std::int64_t exp = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

// Freely reduced word in the free group F(S): adjacent syllables use distinct
// generators and no exponent is zero. The empty word is the identity.
// Generators are referenced by index; names live in the Presentation.
class Word {
 public:
  Word() = default;

  // Free-reduces an arbitrary syllable sequence (cancellation and merging).
  static Word from_syllables(std::vector<Syllable> raw);
  static Word generator(int gen, std::int64_t exp = 1);

  const std::vector<Syllable>& syllables() const noexcept { return syl_; }
  bool is_identity() const noexcept { return syl_.empty(); }
  std::size_t syllable_count() const noexcept { return syl_.size(); }
  // Number of letters, i.e. the sum of |exponent| over syllables.
  std::int64_t letter_length() const;
  // Largest generator index occurring, or -1 for the identity.
  int max_generator() const noexcept;

  Word inverse() const;
  Word pow(std::int64_t k) const;
  std::int64_t exponent_sum(int gen) const;

  struct CyclicReduction;
  CyclicReduction cyclically_reduce() const;
  bool is_cyclically_reduced() const noexcept;

  struct Root;
  // Maximal-exponent decomposition of a cyclically reduced word as a proper
  // power, or nullopt. Throws NotCyclicallyReduced otherwise.
  std::optional<Root> proper_power_root() const;

  friend Word operator*(const Word& u, const Word& v);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syl_;
};

struct Word::CyclicReduction {
  Word core;
  Word conjugator;  // word == conjugator * core * conjugator^-1
};

struct Word::Root {
  Word root;
  std::int64_t exponent = 0;  // >= 2; root^exponent reconstructs the word
};

inline Word free_reduce(std::vector<Syllable> raw) {
  return Word::from_syllables(std::move(raw));
}

}  // namespace foxhom

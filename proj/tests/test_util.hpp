#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "foxhom/word.hpp"

namespace foxhom::testutil {

using Rng = std::mt19937_64;

inline Word random_word(Rng& rng, int generators, int max_syllables, int max_exp = 3) {
  std::uniform_int_distribution<int> len_dist(0, max_syllables);
  std::uniform_int_distribution<int> gen_dist(0, generators - 1);
  std::uniform_int_distribution<int> exp_dist(1, max_exp);
  std::bernoulli_distribution flip(0.5);
  std::vector<Syllable> raw;
  int len = len_dist(rng);
  for (int i = 0; i < len; ++i) {
    std::int64_t e = exp_dist(rng);
    raw.push_back({gen_dist(rng), flip(rng) ? e : -e});
  }
  return Word::from_syllables(std::move(raw));
}

// Letter-level encoding for independent oracles: generator g in direction
// +/-1 becomes +(g+1) / -(g+1).
inline std::vector<int> to_letters(const Word& w) {
  std::vector<int> out;
  for (const Syllable& s : w.syllables()) {
    int letter = s.exp > 0 ? s.gen + 1 : -(s.gen + 1);
    for (std::int64_t i = 0; i < (s.exp > 0 ? s.exp : -s.exp); ++i) out.push_back(letter);
  }
  return out;
}

inline Word from_letters(const std::vector<int>& letters) {
  std::vector<Syllable> raw;
  for (int l : letters) raw.push_back({std::abs(l) - 1, l > 0 ? 1 : -1});
  return Word::from_syllables(std::move(raw));
}

inline std::vector<int> naive_reduce(const std::vector<int>& letters) {
  std::vector<int> stack;
  for (int l : letters) {
    if (!stack.empty() && stack.back() == -l) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return stack;
}

// Brute-force proper-power detection on the letter expansion: the maximal d
// such that the letters are a prefix repeated d times.
struct LetterRoot {
  std::vector<int> root;
  std::int64_t exponent = 1;
};

inline LetterRoot brute_force_power(const std::vector<int>& letters) {
  const std::size_t len = letters.size();
  for (std::size_t period = 1; period <= len / 2; ++period) {
    if (len % period != 0) continue;
    bool ok = true;
    for (std::size_t i = period; i < len && ok; ++i) ok = letters[i] == letters[i - period];
    if (ok) {
      return {{letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(period)},
              static_cast<std::int64_t>(len / period)};
    }
  }
  return {letters, 1};
}

}  // namespace foxhom::testutil

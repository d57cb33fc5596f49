#include "foxhom/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace foxhom {

namespace {

int sign_of(std::int64_t e) { return e > 0 ? 1 : -1; }

// Divisors of k in ascending order.
std::vector<std::size_t> divisors(std::size_t k) {
  std::vector<std::size_t> small, large;
  for (std::size_t d = 1; d * d <= k; ++d) {
    if (k % d == 0) {
      small.push_back(d);
      if (d != k / d) large.push_back(k / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

Word Word::from_syllables(std::vector<Syllable> raw) {
  Word w;
  for (const Syllable& s : raw) {
    if (s.exp == 0) continue;
    if (!w.syl_.empty() && w.syl_.back().gen == s.gen) {
      std::int64_t merged = checked_add(w.syl_.back().exp, s.exp);
      if (merged == 0) {
        w.syl_.pop_back();
      } else {
        w.syl_.back().exp = merged;
      }
    } else {
      w.syl_.push_back(s);
    }
  }
  return w;
}

Word Word::generator(int gen, std::int64_t exp) {
  return from_syllables({{gen, exp}});
}

std::int64_t Word::letter_length() const {
  std::int64_t total = 0;
  for (const Syllable& s : syl_) total = checked_add(total, std::llabs(s.exp));
  return total;
}

int Word::max_generator() const noexcept {
  int m = -1;
  for (const Syllable& s : syl_) m = std::max(m, s.gen);
  return m;
}

Word Word::inverse() const {
  Word w;
  w.syl_.reserve(syl_.size());
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) {
    w.syl_.push_back({it->gen, -it->exp});
  }
  return w;
}

Word operator*(const Word& u, const Word& v) {
  Word w = u;
  for (const Syllable& s : v.syl_) {
    if (!w.syl_.empty() && w.syl_.back().gen == s.gen) {
      std::int64_t merged = checked_add(w.syl_.back().exp, s.exp);
      if (merged == 0) {
        w.syl_.pop_back();
      } else {
        w.syl_.back().exp = merged;
      }
    } else {
      w.syl_.push_back(s);
    }
  }
  return w;
}

Word Word::pow(std::int64_t k) const {
  if (k == 0 || syl_.empty()) return Word();
  if (syl_.size() == 1) {
    return Word::generator(syl_[0].gen, checked_mul(syl_[0].exp, k));
  }
  const Word base = k > 0 ? *this : inverse();
  std::int64_t reps = k > 0 ? k : -k;
  Word out;
  for (std::int64_t i = 0; i < reps; ++i) out = out * base;
  return out;
}

std::int64_t Word::exponent_sum(int gen) const {
  std::int64_t total = 0;
  for (const Syllable& s : syl_) {
    if (s.gen == gen) total = checked_add(total, s.exp);
  }
  return total;
}

bool Word::is_cyclically_reduced() const noexcept {
  if (syl_.size() <= 1) return true;
  const Syllable& f = syl_.front();
  const Syllable& l = syl_.back();
  return !(f.gen == l.gen && sign_of(f.exp) != sign_of(l.exp));
}

Word::CyclicReduction Word::cyclically_reduce() const {
  std::vector<Syllable> core(syl_);
  std::vector<Syllable> conj;
  std::size_t lo = 0, hi = core.size();
  while (hi - lo >= 2) {
    Syllable& f = core[lo];
    Syllable& l = core[hi - 1];
    if (f.gen != l.gen || sign_of(f.exp) == sign_of(l.exp)) break;
    std::int64_t cancel = std::min(std::llabs(f.exp), std::llabs(l.exp));
    std::int64_t trimmed = sign_of(f.exp) * cancel;
    conj.push_back({f.gen, trimmed});
    f.exp -= trimmed;
    l.exp += trimmed;
    if (f.exp == 0) ++lo;
    if (l.exp == 0) --hi;
  }
  CyclicReduction out;
  out.core = Word::from_syllables({core.begin() + static_cast<std::ptrdiff_t>(lo),
                                   core.begin() + static_cast<std::ptrdiff_t>(hi)});
  out.conjugator = Word::from_syllables(std::move(conj));
  return out;
}

std::optional<Word::Root> Word::proper_power_root() const {
  if (!is_cyclically_reduced()) {
    throw Error(ErrorKind::NotCyclicallyReduced,
                "proper power detection requires a cyclically reduced word");
  }
  const std::size_t k = syl_.size();
  if (k == 0) return std::nullopt;
  if (k == 1) {
    std::int64_t mag = std::llabs(syl_[0].exp);
    if (mag < 2) return std::nullopt;
    return Root{Word::generator(syl_[0].gen, sign_of(syl_[0].exp)), mag};
  }

  // Cyclic syllable sequence: a same-generator boundary merges when the word
  // wraps around, so a power w = u^d shows up as a rotation period there.
  const bool wrapped = syl_.front().gen == syl_.back().gen;
  std::vector<Syllable> cyc;
  if (wrapped) {
    cyc.push_back({syl_.front().gen, checked_add(syl_.front().exp, syl_.back().exp)});
    cyc.insert(cyc.end(), syl_.begin() + 1, syl_.end() - 1);
  } else {
    cyc = syl_;
  }
  const std::size_t len = cyc.size();
  std::size_t period = len;
  for (std::size_t d : divisors(len)) {
    if (d == len) break;
    bool ok = true;
    for (std::size_t i = 0; i < len && ok; ++i) {
      ok = cyc[i] == cyc[(i + d) % len];
    }
    if (ok) {
      period = d;
      break;
    }
  }
  if (period == len) return std::nullopt;
  const std::int64_t exponent = static_cast<std::int64_t>(len / period);

  std::vector<Syllable> root;
  if (wrapped) {
    // Split the merged boundary exponent back into this word's own first and
    // last exponents; both have the same sign, so the root stays reduced.
    root.push_back(syl_.front());
    root.insert(root.end(), cyc.begin() + 1, cyc.begin() + static_cast<std::ptrdiff_t>(period));
    root.push_back({syl_.front().gen, syl_.back().exp});
  } else {
    root.assign(syl_.begin(), syl_.begin() + static_cast<std::ptrdiff_t>(period));
  }
  return Root{Word::from_syllables(std::move(root)), exponent};
}

}  // namespace foxhom

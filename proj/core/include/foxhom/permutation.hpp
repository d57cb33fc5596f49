#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace foxhom {

// Permutation of {0, ..., degree-1} acting on the right: i -> image(i).
// Text I/O uses 1-based cycle notation, matching the CLI formats.
class Permutation {
 public:
  explicit Permutation(std::size_t degree);  // identity
  static Permutation from_images(std::vector<int> images);
  static Permutation transposition(std::size_t degree, int i, int j);

  std::size_t degree() const noexcept { return images_.size(); }
  int image(int i) const { return images_[static_cast<std::size_t>(i)]; }
  bool is_identity() const;

  // Right-action composition: i (s * t) = (i s) t, so that the 0/1 matrix
  // map P is a homomorphism, P(s t) = P(s) P(t).
  friend Permutation operator*(const Permutation& s, const Permutation& t);
  Permutation inverse() const;
  Permutation pow(std::int64_t e) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// "(1 2)(3 4)" or "id"; points are 1-based.
std::string to_cycles(const Permutation& s);

// Parses cycle notation. `min_degree` lifts the result to at least that
// degree; otherwise the degree is the largest point mentioned (or 1).
Permutation parse_cycles(const std::string& text, std::size_t min_degree = 1);

}  // namespace foxhom

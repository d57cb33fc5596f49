#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "foxhom/int_matrix.hpp"

namespace foxhom {

// Finitely generated abelian group in invariant-factor form
// Z^free_rank + Z_{n_1} + ... + Z_{n_k} with n_1 | n_2 | ... | n_k, n_i >= 2.
// Equality of values is equality of groups.
class AbelianGroup {
 public:
  AbelianGroup() = default;  // trivial group
  AbelianGroup(std::size_t free_rank, std::vector<BigInt> torsion);
  static AbelianGroup free(std::size_t rank) { return AbelianGroup(rank, {}); }

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<BigInt>& torsion() const noexcept { return torsion_; }
  bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }

  // Removes k from the free rank; throws InsufficientFreeRank rather than
  // clamping, since an underflow always means an invalid representation
  // upstream or an internal bug.
  AbelianGroup subtract_free_rank(std::size_t k) const;

  std::string to_string() const;  // e.g. "Z + Z_16", "Z^2", "0"

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<BigInt> torsion_;
};

inline std::ostream& operator<<(std::ostream& os, const AbelianGroup& g) {
  return os << g.to_string();
}

// Cokernel of a presentation matrix with generator-indexed rows and
// relation-indexed columns.
AbelianGroup abelian_group_from_presentation_matrix(const IntMatrix& a);

// Z_n contributes a Z_2 direct summand exactly when n = 2 (mod 4), so the
// group avoids Z_2 iff no invariant factor is 2 mod 4.
bool is_two_avoiding(const AbelianGroup& g);

}  // namespace foxhom

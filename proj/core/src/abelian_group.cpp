#include "foxhom/abelian_group.hpp"

#include <sstream>

#include "foxhom/errors.hpp"
#include "foxhom/smith.hpp"

namespace foxhom {

AbelianGroup::AbelianGroup(std::size_t free_rank, std::vector<BigInt> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) {
      throw Error(ErrorKind::PreconditionFailed, "torsion coefficient below 2");
    }
    if (i && torsion_[i] % torsion_[i - 1] != 0) {
      throw Error(ErrorKind::PreconditionFailed, "torsion coefficients must form a divisor chain");
    }
  }
}

AbelianGroup AbelianGroup::subtract_free_rank(std::size_t k) const {
  if (k > free_rank_) {
    throw Error(ErrorKind::InsufficientFreeRank,
                "free rank " + std::to_string(free_rank_) + " cannot absorb Z^" +
                    std::to_string(k) + "; invalid representation or internal bug");
  }
  return AbelianGroup(free_rank_ - k, torsion_);
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << 'Z';
    if (free_rank_ > 1) os << '^' << free_rank_;
    first = false;
  }
  for (const BigInt& n : torsion_) {
    if (!first) os << " + ";
    os << "Z_" << n;
    first = false;
  }
  return os.str();
}

AbelianGroup abelian_group_from_presentation_matrix(const IntMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  std::vector<BigInt> torsion;
  for (const BigInt& n : s.diagonal) {
    if (n > 1) torsion.push_back(n);
  }
  return AbelianGroup(a.rows() - s.rank(), std::move(torsion));
}

bool is_two_avoiding(const AbelianGroup& g) {
  for (const BigInt& n : g.torsion()) {
    if (n % 4 == 2) return false;
  }
  return true;
}

}  // namespace foxhom

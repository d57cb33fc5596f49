#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foxhom/abelian_group.hpp"
#include "foxhom/group_ring.hpp"
#include "foxhom/int_matrix.hpp"
#include "foxhom/permutation.hpp"
#include "foxhom/presentation.hpp"

namespace foxhom {

// Transitive permutation representation theta: Gamma -> S_q given by one
// permutation per generator. Construction checks that every relator maps to
// the identity and that the images act transitively (connected cover).
class PermRep {
 public:
  static PermRep validate(const Presentation& p, std::vector<Permutation> images);

  std::size_t degree() const noexcept { return degree_; }
  const Permutation& image(std::size_t gen) const { return images_[gen]; }
  std::size_t generator_count() const noexcept { return images_.size(); }

  Permutation eval(const Word& w) const;

  friend bool operator==(const PermRep&, const PermRep&) = default;

 private:
  PermRep(std::size_t degree, std::vector<Permutation> images);

  std::size_t degree_ = 1;
  std::vector<Permutation> images_;
};

// q x q 0/1 matrix with entry (i, i sigma) = 1.
IntMatrix perm_matrix(const Permutation& sigma);

// Applies theta to a group ring element termwise: the coefficient-weighted
// sum of permutation matrices of the words' images.
IntMatrix theta_eval(const GroupRingElement& x, const PermRep& rep);

// Block integer matrix with n blocks of q rows (generator-major) by m blocks
// of q columns (relator-major); block (j, i) = theta_eval(d r_i / d s_j).
// Presents H1(cover) + Z^(q-1) as an abelian group.
IntMatrix fox_hempel_matrix(const Presentation& p, const PermRep& rep);

AbelianGroup subgroup_h1_fox(const Presentation& p, const PermRep& rep);

// All surjections Gamma -> S_2: nonzero 0/1 generator vectors orthogonal to
// every relator's exponent-sum parity vector, in ascending bitmask order
// (bit i = generator i maps to the swap).
std::vector<PermRep> enumerate_index2_reps(const Presentation& p);

// Presentation of the stabilizer subgroup theta^-1{sigma : 1 sigma = 1} via
// a breadth-first Schreier transversal (cosets in discovery order,
// generators in presentation order, positive direction first). Subgroup
// generators are the Schreier generators of non-tree edges, named
// "<generator>_<coset>"; relators are the q rewrites of each relator.
Presentation reidemeister_schreier(const Presentation& p, const PermRep& rep);

// Oracle route: abelianization of the Reidemeister-Schreier presentation.
AbelianGroup subgroup_h1_rs(const Presentation& p, const PermRep& rep);

// Third route: exact ker d1 / im d2 of the lifted presentation 2-complex
// (q vertices, nq edges, mq cells). d2 is accumulated by traversing each
// relator lift sheet by sheet, independently of the Fox derivative path.
AbelianGroup cover_chain_h1(const Presentation& p, const PermRep& rep);

struct TwoAvoidingCover {
  PermRep rep;
  AbelianGroup h1;
};

// First rep in enumerate_index2_reps order whose kernel H1 avoids Z_2.
std::optional<TwoAvoidingCover> find_two_avoiding_index2(const Presentation& p);

// Text format: "a:(1 2), t:id" with optional explicit "deg=2" entry; the
// degree is otherwise inferred from the largest moved point.
PermRep parse_perm_rep(const Presentation& p, const std::string& text);
std::string to_string(const PermRep& rep, const Presentation& p);

}  // namespace foxhom

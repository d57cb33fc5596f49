#pragma once

#include <vector>

#include "foxhom/int_matrix.hpp"

namespace foxhom {

// PAQ = D with P, Q unimodular and D the diagonal of the positive invariant
// factors n_1 | n_2 | ... | n_k padded with zeros. The inverse witnesses are
// tracked alongside so kernels can be read off without a separate inversion.
struct SmithDecomposition {
  IntMatrix p, p_inv;  // rows x rows
  IntMatrix q, q_inv;  // cols x cols
  std::vector<BigInt> diagonal;
  std::size_t rows = 0, cols = 0;

  std::size_t rank() const noexcept { return diagonal.size(); }
  IntMatrix diagonal_matrix() const;
};

// Elementary row/column reduction with minimal-|entry| pivoting and the
// divisibility-repair step. Every call re-verifies P*A*Q = D, |det| = 1 for
// both witnesses, positivity and the divisor chain.
SmithDecomposition smith_normal_form(const IntMatrix& a);

// gcd-of-minors route: n_i = d_i / d_{i-1} with d_i the gcd of all i x i
// minors. Test oracle only; throws TooLarge when min(rows, cols) > 6.
std::vector<BigInt> invariant_factors_via_minors(const IntMatrix& a);

}  // namespace foxhom

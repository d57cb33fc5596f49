#include "foxhom/smith.hpp"

#include <optional>

#include "foxhom/errors.hpp"

namespace foxhom {

namespace {

[[noreturn]] void corrupt(const char* what) {
  // Reaching this means the reduction itself is wrong, not the input.
  throw std::logic_error(std::string("smith_normal_form verification failed: ") + what);
}

void verify(const IntMatrix& a, const SmithDecomposition& s) {
  IntMatrix lhs = s.p * a * s.q;
  if (lhs != s.diagonal_matrix()) corrupt("P*A*Q != D");
  if (s.p * s.p_inv != IntMatrix::identity(s.rows)) corrupt("P*Pinv != I");
  if (s.q * s.q_inv != IntMatrix::identity(s.cols)) corrupt("Q*Qinv != I");
  if (big_abs(bareiss_determinant(s.p)) != 1) corrupt("det P not a unit");
  if (big_abs(bareiss_determinant(s.q)) != 1) corrupt("det Q not a unit");
  for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
    if (s.diagonal[i] < 1) corrupt("nonpositive invariant factor");
    if (i && s.diagonal[i] % s.diagonal[i - 1] != 0) corrupt("divisor chain broken");
  }
}

// All size-k index subsets of {0..n-1}, ascending.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] + (k - i) < n) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

IntMatrix SmithDecomposition::diagonal_matrix() const {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < diagonal.size(); ++i) d.at(i, i) = diagonal[i];
  return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithDecomposition s;
  s.rows = m;
  s.cols = n;
  s.p = IntMatrix::identity(m);
  s.p_inv = IntMatrix::identity(m);
  s.q = IntMatrix::identity(n);
  s.q_inv = IntMatrix::identity(n);

  IntMatrix d = a;

  auto row_swap = [&](std::size_t i, std::size_t j) {
    d.swap_rows(i, j);
    s.p.swap_rows(i, j);
    s.p_inv.swap_cols(i, j);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    d.swap_cols(i, j);
    s.q.swap_cols(i, j);
    s.q_inv.swap_rows(i, j);
  };
  auto row_add = [&](std::size_t i, std::size_t j, const BigInt& c) {
    // row i += c * row j
    d.add_row_multiple(i, j, c);
    s.p.add_row_multiple(i, j, c);
    s.p_inv.add_col_multiple(j, i, -c);
  };
  auto col_add = [&](std::size_t j, std::size_t i, const BigInt& c) {
    // col j += c * col i
    d.add_col_multiple(j, i, c);
    s.q.add_col_multiple(j, i, c);
    s.q_inv.add_row_multiple(i, j, -c);
  };
  auto row_negate = [&](std::size_t i) {
    d.negate_row(i);
    s.p.negate_row(i);
    s.p_inv.negate_col(i);
  };

  std::size_t t = 0;
  while (t < m && t < n) {
    // minimal |value| pivot in the trailing submatrix
    auto find_pivot = [&]() -> std::optional<std::pair<std::size_t, std::size_t>> {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      BigInt best_abs;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (d.at(i, j) == 0) continue;
          BigInt mag = big_abs(d.at(i, j));
          if (!best || mag < best_abs) {
            best = {i, j};
            best_abs = mag;
          }
        }
      }
      return best;
    };

    auto pivot = find_pivot();
    if (!pivot) break;
    row_swap(t, pivot->first);
    col_swap(t, pivot->second);

    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d.at(i, t) == 0) continue;
        BigInt quo = d.at(i, t) / d.at(t, t);  // truncated; remainder < |pivot|
        if (quo != 0) row_add(i, t, -quo);
        if (d.at(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d.at(t, j) == 0) continue;
        BigInt quo = d.at(t, j) / d.at(t, t);
        if (quo != 0) col_add(j, t, -quo);
        if (d.at(t, j) != 0) dirty = true;
      }
      if (dirty) {
        auto next = find_pivot();
        row_swap(t, next->first);
        col_swap(t, next->second);
        continue;
      }
      // pivot now alone in its row and column; repair divisibility so the
      // invariant-factor chain comes out right
      bool repaired = false;
      for (std::size_t i = t + 1; i < m && !repaired; ++i) {
        for (std::size_t j = t + 1; j < n && !repaired; ++j) {
          if (d.at(i, j) % d.at(t, t) != 0) {
            row_add(t, i, 1);
            repaired = true;
          }
        }
      }
      if (!repaired) break;
    }
    ++t;
  }

  for (std::size_t i = 0; i < t; ++i) {
    if (d.at(i, i) < 0) row_negate(i);
    s.diagonal.push_back(d.at(i, i));
  }

  verify(a, s);
  return s;
}

std::vector<BigInt> invariant_factors_via_minors(const IntMatrix& a) {
  const std::size_t bound = std::min(a.rows(), a.cols());
  if (bound > 6) {
    throw Error(ErrorKind::TooLarge,
                "minor enumeration is capped at 6x6; use smith_normal_form");
  }
  std::vector<BigInt> factors;
  BigInt d_prev = 1;
  for (std::size_t size = 1; size <= bound; ++size) {
    BigInt g = 0;
    std::vector<std::size_t> rows(size), cols(size);
    for (std::size_t i = 0; i < size; ++i) rows[i] = i;
    do {
      for (std::size_t i = 0; i < size; ++i) cols[i] = i;
      do {
        IntMatrix sub(size, size);
        for (std::size_t i = 0; i < size; ++i) {
          for (std::size_t j = 0; j < size; ++j) sub.at(i, j) = a.at(rows[i], cols[j]);
        }
        g = big_gcd(g, bareiss_determinant(sub));
      } while (next_combination(cols, a.cols()));
    } while (next_combination(rows, a.rows()));
    if (g == 0) break;  // rank reached
    factors.push_back(g / d_prev);
    d_prev = g;
  }
  return factors;
}

}  // namespace foxhom

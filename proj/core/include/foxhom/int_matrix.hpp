#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "foxhom/bigint.hpp"

namespace foxhom {

// Dense matrix of arbitrary-precision integers. Zero rows or columns are
// legal shapes; they arise from free groups and empty relator lists.
class IntMatrix {
 public:
  IntMatrix() = default;  // 0 x 0
  IntMatrix(std::size_t rows, std::size_t cols);  // zero-filled
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& at(std::size_t i, std::size_t j);
  const BigInt& at(std::size_t i, std::size_t j) const;

  bool is_zero() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  // row i += c * row j, and the column analogue.
  void add_row_multiple(std::size_t i, std::size_t j, const BigInt& c);
  void add_col_multiple(std::size_t j, std::size_t i, const BigInt& c);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

// Exact determinant by fraction-free (Bareiss) elimination; square input.
BigInt bareiss_determinant(const IntMatrix& a);

// Literal format: rows separated by ';', entries by ','. "" is the 0x0 matrix.
IntMatrix parse_matrix(const std::string& literal);
std::string to_literal(const IntMatrix& a);

std::ostream& operator<<(std::ostream& os, const IntMatrix& a);

}  // namespace foxhom

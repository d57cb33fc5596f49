#include "foxhom/int_matrix.hpp"

#include <ostream>
#include <sstream>

#include "foxhom/errors.hpp"

namespace foxhom {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

BigInt& IntMatrix::at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
const BigInt& IntMatrix::at(std::size_t i, std::size_t j) const {
  return entries_[i * cols_ + j];
}

bool IntMatrix::is_zero() const {
  for (const BigInt& e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const BigInt& c) {
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMatrix::add_col_multiple(std::size_t j, std::size_t i, const BigInt& c) {
  for (std::size_t k = 0; k < rows_; ++k) at(k, j) += c * at(k, i);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::PreconditionFailed, "matrix product shape mismatch");
  }
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::PreconditionFailed, "matrix sum shape mismatch");
  }
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

BigInt bareiss_determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorKind::PreconditionFailed, "determinant of a non-square matrix");
  }
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m.at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      m.swap_rows(k, pivot);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num / prev;  // exact by Bareiss
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

IntMatrix parse_matrix(const std::string& literal) {
  // trim
  std::size_t b = literal.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return IntMatrix();
  std::size_t e = literal.find_last_not_of(" \t\r\n");
  std::string body = literal.substr(b, e - b + 1);

  std::vector<std::vector<BigInt>> rows;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t stop = body.find(';', start);
    std::string row_text =
        body.substr(start, stop == std::string::npos ? std::string::npos : stop - start);
    std::vector<BigInt> row;
    std::size_t rs = 0;
    while (rs <= row_text.size()) {
      std::size_t rc = row_text.find(',', rs);
      std::string cell =
          row_text.substr(rs, rc == std::string::npos ? std::string::npos : rc - rs);
      std::size_t cb = cell.find_first_not_of(" \t\r\n");
      if (cb == std::string::npos) {
        throw ParseError(ErrorKind::SyntaxError, "empty matrix entry", 1,
                         static_cast<int>(start + rs) + 1);
      }
      std::size_t ce = cell.find_last_not_of(" \t\r\n");
      try {
        row.emplace_back(cell.substr(cb, ce - cb + 1));
      } catch (const std::exception&) {
        throw ParseError(ErrorKind::SyntaxError, "bad matrix entry '" + cell + "'", 1,
                         static_cast<int>(start + rs) + 1);
      }
      if (rc == std::string::npos) break;
      rs = rc + 1;
    }
    rows.push_back(std::move(row));
    if (stop == std::string::npos) break;
    start = stop + 1;
  }
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols) {
      throw ParseError(ErrorKind::SyntaxError, "ragged matrix rows", 1, 1);
    }
  }
  IntMatrix out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = rows[i][j];
  }
  return out;
}

std::string to_literal(const IntMatrix& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) os << ';';
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) os << ',';
      os << a.at(i, j);
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& a) {
  return os << '[' << a.rows() << 'x' << a.cols() << ": " << to_literal(a) << ']';
}

}  // namespace foxhom

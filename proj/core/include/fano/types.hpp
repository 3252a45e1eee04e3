// Core exact-arithmetic types shared by all modules.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace fano {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Vector of exact rationals.
using RatVector = std::vector<Rational>;

/// Dense integer matrix with arbitrary-precision entries, row-major.
/// Rows double as lattice points / matroid ground elements throughout,
/// so the row count is always >= 1. A zero column count is permitted only
/// for degenerate intermediates (e.g. duals of free matroids).
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0) throw std::invalid_argument("IntMatrix: rows must be >= 1");
  }

  IntMatrix(std::initializer_list<std::initializer_list<long>> init)
      : rows_(init.size()), cols_(0) {
    if (rows_ == 0) throw std::invalid_argument("IntMatrix: rows must be >= 1");
    cols_ = init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : init) {
      if (r.size() != cols_)
        throw std::invalid_argument("IntMatrix: ragged initializer");
      for (long v : r) data_.emplace_back(v);
    }
  }

  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) throw std::invalid_argument("IntMatrix: rows must be >= 1");
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_)
        throw std::invalid_argument("IntMatrix: ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[check(i, j)]; }
  const Int& at(std::size_t i, std::size_t j) const { return data_[check(i, j)]; }

  std::vector<Int> row(std::size_t i) const {
    if (i >= rows_) throw std::out_of_range("IntMatrix::row");
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  std::vector<Int> col(std::size_t j) const {
    if (j >= cols_) throw std::out_of_range("IntMatrix::col");
    std::vector<Int> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  IntMatrix transpose() const {
    if (cols_ == 0) throw std::invalid_argument("IntMatrix::transpose: zero columns");
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  IntMatrix submatrix(const std::vector<std::size_t>& row_idx,
                      const std::vector<std::size_t>& col_idx) const {
    if (row_idx.empty()) throw std::invalid_argument("IntMatrix::submatrix: empty rows");
    IntMatrix s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
      for (std::size_t j = 0; j < col_idx.size(); ++j)
        s.at(i, j) = at(row_idx[i], col_idx[j]);
    return s;
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i == 0 ? "[" : " ";
      for (std::size_t j = 0; j < cols_; ++j) {
        s += at(i, j).str();
        if (j + 1 < cols_) s += " ";
      }
      s += i + 1 < rows_ ? "\n" : "]";
    }
    return s;
  }

 private:
  std::size_t check(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("IntMatrix::at");
    return i * cols_ + j;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Int> data_;
};

/// Matrix product A * B with exact integer arithmetic.
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

/// Row vector times matrix: (1 x m) * (m x n) -> length-n vector.
std::vector<Int> vecmat(const std::vector<Int>& v, const IntMatrix& m);

/// Inner product of two equal-length integer vectors.
Int dot(const std::vector<Int>& a, const std::vector<Int>& b);

}  // namespace fano

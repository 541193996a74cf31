#pragma once

// Exact dense linear algebra over Z and Q for desk-sized matrices.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "coxm06/rational.hpp"

namespace coxm06 {

using RationalVector = std::vector<Rational>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  long get(std::size_t r, std::size_t c) const { return at(r, c).get_si(); }

  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  IntMatrix transpose() const;
  IntMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  bool is_zero() const;
  bool is_identity() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpz_class> data_;
};

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  explicit RationalMatrix(const IntMatrix& m);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  RationalVector row(std::size_t r) const;

  RationalMatrix transpose() const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination; pivot = first nonzero entry in column order.
std::size_t rank(const IntMatrix& m);
std::size_t rank(const RationalMatrix& m);

/// Reduced row echelon form over Q; pivot columns are returned through the second argument.
RationalMatrix rref(const RationalMatrix& m, std::vector<std::size_t>* pivots = nullptr);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<RationalVector> kernel_basis(const IntMatrix& m);
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// Some solution of m x = b, or nullopt when the system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b);

/// Coefficients c with c^T m = v, or nullopt if v is not in the row space.
std::optional<RationalVector> row_space_coefficients(const IntMatrix& m, const RationalVector& v);

Rational determinant(const RationalMatrix& m);
/// Throws Error when m is singular.
RationalMatrix inverse(const RationalMatrix& m);

}  // namespace coxm06

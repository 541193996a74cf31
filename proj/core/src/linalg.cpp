#include "coxm06/linalg.hpp"

#include <utility>

#include "coxm06/errors.hpp"

namespace coxm06 {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw Error("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  t.row_labels = col_labels;
  t.col_labels = row_labels;
  return t;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
  IntMatrix s(rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (std::size_t j = 0; j < cs.size(); ++j) s.at(i, j) = at(rs[i], cs[j]);
    if (!row_labels.empty()) s.row_labels.push_back(row_labels[rs[i]]);
  }
  if (!col_labels.empty())
    for (auto c : cs) s.col_labels.push_back(col_labels[c]);
  return s;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix product: dimension mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpz_class& x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p.at(i, j) += x * b.at(k, j);
    }
  p.row_labels = a.row_labels;
  p.col_labels = b.col_labels;
  return p;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(const IntMatrix& m) : RationalMatrix(m.rows(), m.cols()) {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = Rational(m.at(r, c), 1);
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix product: dimension mismatch");
  RationalMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p.at(i, j) += x * b.at(k, j);
    }
  return p;
}

std::size_t rank(const IntMatrix& m) {
  // Bareiss: every intermediate entry is a minor of m, so division by the previous pivot is exact.
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.at(r, c);
  mpz_class prev = 1;
  std::size_t rk = 0;
  for (std::size_t col = 0; col < m.cols() && rk < m.rows(); ++col) {
    std::size_t piv = rk;
    while (piv < m.rows() && a[piv][col] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rk]);
    for (std::size_t r = rk + 1; r < m.rows(); ++r) {
      for (std::size_t c = col + 1; c < m.cols(); ++c) {
        mpz_class v = a[rk][col] * a[r][c] - a[r][col] * a[rk][c];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[r][c] = v;
      }
      a[r][col] = 0;
    }
    prev = a[rk][col];
    ++rk;
  }
  return rk;
}

RationalMatrix rref(const RationalMatrix& m, std::vector<std::size_t>* pivots) {
  RationalMatrix a = m;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t p = r;
    while (p < a.rows() && a.at(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(p, c), a.at(r, c));
    Rational inv = a.at(r, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a.at(r, c) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, col).is_zero()) continue;
      Rational f = a.at(i, col);
      for (std::size_t c = col; c < a.cols(); ++c) a.at(i, c) -= f * a.at(r, c);
    }
    piv.push_back(col);
    ++r;
  }
  if (pivots) *pivots = std::move(piv);
  return a;
}

std::size_t rank(const RationalMatrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  std::vector<std::size_t> piv;
  RationalMatrix a = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a.at(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RationalVector> kernel_basis(const IntMatrix& m) { return kernel_basis(RationalMatrix(m)); }

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b) {
  if (b.size() != m.rows()) throw Error("solve: right-hand side has the wrong length");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  std::vector<std::size_t> piv;
  RationalMatrix red = rref(aug, &piv);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  RationalVector x(m.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = red.at(i, m.cols());
  return x;
}

std::optional<RationalVector> row_space_coefficients(const IntMatrix& m, const RationalVector& v) {
  return solve(RationalMatrix(m).transpose(), v);
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  RationalMatrix a = m;
  Rational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a.at(p, col).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a.at(p, c), a.at(col, c));
      det = -det;
    }
    det *= a.at(col, col);
    Rational inv = a.at(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a.at(r, col).is_zero()) continue;
      Rational f = a.at(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  std::vector<std::size_t> piv;
  RationalMatrix red = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) throw Error("matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = red.at(r, n + c);
  return inv;
}

}  // namespace coxm06

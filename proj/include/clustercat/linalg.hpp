#pragma once

// Exact dense linear algebra over the rationals.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "clustercat/error.hpp"

namespace clustercat {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Builds a matrix from nested integer rows; all rows must have equal length.
  static Matrix from_rows(const std::vector<std::vector<long>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) throw InputError("ragged matrix rows");
      for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  /// Rows [r0, r0 + n) as a new matrix.
  Matrix row_block(std::size_t r0, std::size_t n) const {
    Matrix b(n, cols_);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < cols_; ++c) b(r, c) = (*this)(r0 + r, c);
    return b;
  }

  /// Columns [c0, c0 + n) as a new matrix.
  Matrix col_block(std::size_t c0, std::size_t n) const {
    Matrix b(rows_, n);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < n; ++c) b(r, c) = (*this)(r, c0 + c);
    return b;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvariantViolation("matrix product shape mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
      }
    return p;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvariantViolation("matrix sum shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvariantViolation("matrix difference shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const Rational& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows_; ++r) {
      if (r) os << "; ";
      for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? " " : "") << m(r, c);
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline Vector operator*(const Matrix& m, const Vector& v) {
  if (m.cols() != v.size()) throw InvariantViolation("matrix-vector shape mismatch");
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  return out;
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

struct Echelon {
  Matrix reduced;                   // reduced row-echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each kept row
};

/// Reduced row-echelon form. Pivots are chosen left to right, first nonzero row
/// wins, so the result is reproducible for a given input.
inline Echelon row_reduce(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && sgn(m(sel, col)) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {m.row_block(0, row), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

/// Kernel of a linear map given by its matrix. Basis vectors are the columns of
/// `basis`; vector t has a 1 in column `free_cols[t]` and 0 in every other free
/// column, so the coordinates of any kernel element are its free-column entries.
struct Kernel {
  Matrix basis;
  std::vector<std::size_t> free_cols;

  std::size_t dim() const { return free_cols.size(); }

  Vector coords(const Vector& v) const {
    Vector c(free_cols.size());
    for (std::size_t t = 0; t < free_cols.size(); ++t) c[t] = v[free_cols[t]];
    return c;
  }
};

inline Kernel kernel(const Matrix& m) {
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Kernel k;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) k.free_cols.push_back(c);
  k.basis = Matrix(m.cols(), k.free_cols.size());
  for (std::size_t t = 0; t < k.free_cols.size(); ++t) {
    std::size_t f = k.free_cols[t];
    k.basis(f, t) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k.basis(e.pivots[r], t) = -e.reduced(r, f);
  }
  return k;
}

/// A subspace U of K^n held in reduced echelon form, with the quotient K^n / U
/// coordinatized by the non-pivot positions.
class Subspace {
 public:
  Subspace() = default;

  /// Subspace spanned by the given row vectors of length `ambient`.
  Subspace(std::size_t ambient, const Matrix& spanning_rows) : ambient_(ambient) {
    if (spanning_rows.rows() > 0 && spanning_rows.cols() != ambient)
      throw InvariantViolation("subspace generator length mismatch");
    Echelon e = row_reduce(spanning_rows.rows() ? spanning_rows : Matrix(0, ambient));
    rows_ = std::move(e.reduced);
    pivots_ = std::move(e.pivots);
    std::vector<bool> is_pivot(ambient, false);
    for (auto p : pivots_) is_pivot[p] = true;
    for (std::size_t c = 0; c < ambient; ++c)
      if (!is_pivot[c]) nonpivots_.push_back(c);
  }

  static Subspace column_space(const Matrix& m) { return Subspace(m.rows(), m.transpose()); }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  std::size_t codim() const { return nonpivots_.size(); }
  const std::vector<std::size_t>& nonpivots() const { return nonpivots_; }

  Vector reduce(Vector v) const {
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      Rational f = v[pivots_[r]];
      if (sgn(f) == 0) continue;
      for (std::size_t c = 0; c < ambient_; ++c) v[c] -= f * rows_(r, c);
    }
    return v;
  }

  bool contains(const Vector& v) const { return is_zero(reduce(v)); }

  /// Coordinates of the class of v in the quotient.
  Vector quotient_coords(const Vector& v) const {
    Vector red = reduce(v);
    Vector q(nonpivots_.size());
    for (std::size_t t = 0; t < nonpivots_.size(); ++t) q[t] = red[nonpivots_[t]];
    return q;
  }

  /// Matrix of the projection K^n -> K^n / U in quotient coordinates.
  Matrix projection() const {
    Matrix p(nonpivots_.size(), ambient_);
    for (std::size_t t = 0; t < nonpivots_.size(); ++t) p(t, nonpivots_[t]) = 1;
    for (std::size_t r = 0; r < pivots_.size(); ++r)
      for (std::size_t t = 0; t < nonpivots_.size(); ++t) p(t, pivots_[r]) = -rows_(r, nonpivots_[t]);
    return p;
  }

  /// A section of projection(): basis vector t goes to e_{nonpivots[t]}.
  Matrix section() const {
    Matrix s(ambient_, nonpivots_.size());
    for (std::size_t t = 0; t < nonpivots_.size(); ++t) s(nonpivots_[t], t) = 1;
    return s;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> nonpivots_;
};

/// Dimension of the span of a list of vectors.
inline std::size_t span_dim(const std::vector<Vector>& vs, std::size_t ambient) {
  if (vs.empty()) return 0;
  Matrix m(vs.size(), ambient);
  for (std::size_t r = 0; r < vs.size(); ++r)
    for (std::size_t c = 0; c < ambient; ++c) m(r, c) = vs[r][c];
  return rank(m);
}

/// Exact inverse of a square matrix; throws if singular.
inline Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InvariantViolation("inverse of non-square matrix");
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  Echelon e = row_reduce(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw InvariantViolation("singular matrix");
  return e.reduced.col_block(n, n);
}

}  // namespace clustercat

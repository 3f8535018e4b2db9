#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arckernel/rational.hpp"

namespace arckernel {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Integer literal matrix, e.g. RatMatrix{{1, 0}, {0, 1}}.
  RatMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      for (long v : r) data_.emplace_back(v);
    }
  }

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Rational> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  std::vector<Rational> column(std::size_t j) const {
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  std::span<const Rational> entries() const { return data_; }

  RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
  }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  RatMatrix& operator+=(const RatMatrix& o) {
    require_same_shape(o, "+");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  RatMatrix& operator-=(const RatMatrix& o) {
    require_same_shape(o, "-");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  RatMatrix& operator*=(const Rational& s) {
    for (auto& q : data_) q *= s;
    return *this;
  }

  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
  friend RatMatrix operator*(const Rational& s, RatMatrix a) { return a *= s; }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("matrix product shape mismatch: " + a.shape() + " * " +
                                  b.shape());
    RatMatrix c(a.rows_, b.cols_);
    Rational t;
    // Incidence-type operands are mostly zero; skipping them dominates the cost.
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Rational& bkj = b(k, j);
          if (sgn(bkj) == 0) continue;
          t = aik * bkj;
          c(i, j) += t;
        }
      }
    return c;
  }

  std::vector<Rational> apply(std::span<const Rational> v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<Rational> out(rows_);
    Rational t;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const Rational& a = (*this)(i, j);
        if (sgn(a) == 0 || sgn(v[j]) == 0) continue;
        t = a * v[j];
        out[i] += t;
      }
    return out;
  }

  std::string shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

 private:
  void require_same_shape(const RatMatrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument(std::string{"matrix "} + op + " shape mismatch: " + shape() +
                                  " vs " + o.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// [a | b]
inline RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  RatMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

/// [a ; b]
inline RatMatrix vstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  RatMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
  return out;
}

inline RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

/// Matrix whose columns are the given vectors (all of length `rows`).
inline RatMatrix from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& cols) {
  RatMatrix out(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) out(i, j) = cols[j][i];
  }
  return out;
}

struct Echelon {
  RatMatrix reduced;                 // reduced row-echelon form
  std::vector<std::size_t> pivots;   // pivot column per nonzero row
};

/// Gauss-Jordan elimination. Pivot = first nonzero entry found in the column.
inline Echelon rref(RatMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  Rational f, t;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    f = m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) /= f;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (sgn(m(r, j)) == 0) continue;
        t = f * m(r, j);
        m(i, j) -= t;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

struct RankKernel {
  std::size_t rank = 0;
  RatMatrix kernel_basis;  // cols x (cols - rank), one column per free variable
};

/// Rank and the standard free-variable kernel basis.
inline RankKernel rank_and_kernel(const RatMatrix& m) {
  Echelon e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  RatMatrix basis(n, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(f, k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = -e.reduced(r, f);
  }
  return {e.pivots.size(), std::move(basis)};
}

/// True iff every column of `vectors` lies in the column span of `basis`.
inline bool span_contains(const RatMatrix& basis, const RatMatrix& vectors) {
  if (basis.rows() != vectors.rows()) throw std::invalid_argument("ambient dimension mismatch");
  return rank(hstack(basis, vectors)) == rank(basis);
}

inline bool same_span(const RatMatrix& a, const RatMatrix& b) {
  return span_contains(a, b) && span_contains(b, a);
}

/// Solves basis * X = vectors for X; basis must have independent columns and
/// contain every column of vectors. Throws otherwise.
inline RatMatrix coordinates(const RatMatrix& basis, const RatMatrix& vectors) {
  const std::size_t d = basis.cols();
  Echelon e = rref(hstack(basis, vectors));
  if (e.pivots.size() != d || (d > 0 && e.pivots.back() != d - 1))
    throw std::invalid_argument("coordinates: vectors outside span or dependent basis");
  RatMatrix x(d, vectors.cols());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < vectors.cols(); ++j) x(i, j) = e.reduced(i, d + j);
  return x;
}

/// Columns of m at the pivot positions of its echelon form: a basis of col(m).
inline RatMatrix column_space_basis(const RatMatrix& m) {
  Echelon e = rref(m);
  RatMatrix out(m.rows(), e.pivots.size());
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, k) = m(i, e.pivots[k]);
  return out;
}

}  // namespace arckernel

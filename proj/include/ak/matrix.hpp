#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <string>
#include <vector>

#include "ak/scalar.hpp"

namespace ak {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v[i] = 1;
  return v;
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

inline Vector add(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vector sub(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vector scaled(const Scalar& s, const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

/// y += s * x
inline void axpy(Vector& y, const Scalar& s, const Vector& x) {
  assert(x.size() == y.size());
  if (sgn(s) == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) y[i] += s * x[i];
}

inline Scalar dot(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  Scalar r = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) r += a[i] * b[i];
  return r;
}

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Rows must share one length; `cols` is only consulted when `rows` is empty.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols = 0) {
    Matrix m(rows.size(), rows.empty() ? cols : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      assert(rows[r].size() == m.cols_);
      std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * m.cols_));
    }
    return m;
  }

  static Matrix from_cols(const std::vector<Vector>& cols, std::size_t rows = 0) {
    return from_rows(cols, rows).transpose();
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  Vector col(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  void set_col(std::size_t c, const Vector& v) {
    assert(v.size() == rows_);
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  std::vector<Vector> row_list() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return sgn(x) == 0; });
  }

  Scalar trace() const {
    assert(square());
    Scalar t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }

  friend Matrix operator*(const Scalar& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (sgn(b(k, j)) != 0) p(i, j) += aik * b(k, j);
      }
    return p;
  }

  friend Vector operator*(const Matrix& a, const Vector& v) {
    assert(a.cols_ == v.size());
    Vector r = zero_vector(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0) r[i] += a(i, k) * v[k];
    return r;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// u^T M v
inline Scalar bilinear(const Vector& u, const Matrix& m, const Vector& v) { return dot(u, m * v); }

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

inline bool is_symmetric(const Matrix& m) { return m.square() && m == m.transpose(); }
inline bool is_skew(const Matrix& m) { return m.square() && m == -m.transpose(); }

/// Block-diagonal sum diag(a, b).
inline Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

}  // namespace ak

#pragma once

#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ak/matrix.hpp"

namespace ak {

struct RrefResult {
  Matrix form;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row-echelon form. The pivot of each column is the first row at or
/// below the current one with a nonzero entry, so the output is unique.
inline RrefResult rref_full(Matrix m) {
  RrefResult out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead_row, k));
    const Scalar inv = 1 / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      const Scalar f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (sgn(m(lead_row, k)) != 0) m(r, k) -= f * m(lead_row, k);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.rank = lead_row;
  out.form = std::move(m);
  return out;
}

inline std::pair<Matrix, std::size_t> rref(const Matrix& m) {
  auto r = rref_full(m);
  return {std::move(r.form), r.rank};
}

inline std::size_t rank(const Matrix& m) { return rref_full(m).rank; }

/// Linear subspace of Q^n held as the nonzero rows of a reduced row-echelon
/// matrix. Equal subspaces have identical bases, so `==` is subspace equality.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t n) { return Subspace(n, Matrix(0, n), {}); }
  static Subspace full(std::size_t n) { return span(n, Matrix::identity(n).row_list()); }

  static Subspace span(std::size_t n, const std::vector<Vector>& vectors) {
    if (vectors.empty()) return zero(n);
    auto r = rref_full(Matrix::from_rows(vectors, n));
    Matrix b(r.rank, n);
    for (std::size_t i = 0; i < r.rank; ++i)
      for (std::size_t c = 0; c < n; ++c) b(i, c) = r.form(i, c);
    return Subspace(n, std::move(b), std::move(r.pivots));
  }

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_; }
  const Matrix& basis() const noexcept { return basis_; }
  std::vector<Vector> vectors() const { return basis_.row_list(); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Residual of v after elimination against the basis; zero iff v is in the span.
  Vector reduce(Vector v) const {
    for (std::size_t i = 0; i < dim(); ++i) {
      const Scalar f = v[pivots_[i]];
      if (sgn(f) != 0) axpy(v, -f, basis_.row(i));
    }
    return v;
  }

  bool contains(const Vector& v) const { return ak::is_zero(reduce(v)); }

  bool contains(const Subspace& s) const {
    for (std::size_t i = 0; i < s.dim(); ++i)
      if (!contains(s.basis().row(i))) return false;
    return true;
  }

  /// Coefficients of v in this basis (v must lie in the subspace).
  Vector coordinates(const Vector& v) const {
    Vector c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(std::size_t n, Matrix b, std::vector<std::size_t> piv)
      : ambient_(n), basis_(std::move(b)), pivots_(std::move(piv)) {}

  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

inline Subspace sum(const Subspace& a, const Subspace& b) {
  auto v = a.vectors();
  auto w = b.vectors();
  v.insert(v.end(), w.begin(), w.end());
  return Subspace::span(a.ambient_dim(), v);
}

/// {x : m x = 0}
inline Subspace kernel(const Matrix& m) {
  auto r = rref_full(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(n);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.form(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

inline Subspace intersection(const Subspace& a, const Subspace& b) {
  // x = sum a_i alpha_i = sum b_j beta_j  <=>  [A^T | -B^T] (alpha, beta) = 0
  const std::size_t n = a.ambient_dim();
  Matrix m(n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t r = 0; r < n; ++r) m(r, i) = a.basis()(i, r);
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t r = 0; r < n; ++r) m(r, a.dim() + j) = -b.basis()(j, r);
  std::vector<Vector> out;
  for (const auto& coeff : kernel(m).vectors()) {
    Vector x = zero_vector(n);
    for (std::size_t i = 0; i < a.dim(); ++i) axpy(x, coeff[i], a.basis().row(i));
    out.push_back(std::move(x));
  }
  return Subspace::span(n, out);
}

/// { v : v^T gram b = 0 for every basis row b }. Works for symmetric and skew grams.
inline Subspace complement(const Subspace& s, const Matrix& gram) {
  if (!gram.square() || gram.rows() != s.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "gram matrix does not match the ambient dimension");
  if (rank(gram) != gram.rows()) throw Error(ErrorKind::SingularGram, "gram matrix is degenerate");
  std::vector<Vector> constraints;
  for (const auto& b : s.vectors()) constraints.push_back(gram * b);
  if (constraints.empty()) return Subspace::full(s.ambient_dim());
  return kernel(Matrix::from_rows(constraints));
}

inline Scalar determinant(Matrix m) {
  assert(m.square());
  const std::size_t n = m.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      const Scalar f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

/// Leading principal minors det(M[0..k, 0..k]) for k = 1..n.
inline std::vector<Scalar> leading_minors(const Matrix& m) {
  std::vector<Scalar> out;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    Matrix sub(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) sub(r, c) = m(r, c);
    out.push_back(determinant(std::move(sub)));
  }
  return out;
}

/// Inverse of a nonsingular square matrix; throws SingularGram otherwise.
inline Matrix inverse(const Matrix& m) {
  assert(m.square());
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto red = rref_full(std::move(aug));
  if (red.rank < n || red.pivots[n - 1] != n - 1) throw Error(ErrorKind::SingularGram, "matrix is singular");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.form(r, n + c);
  return inv;
}

/// Unique solution of a x = b for nonsingular square a.
inline Vector solve(const Matrix& a, const Vector& b) { return inverse(a) * b; }

/// Congruence diagonalisation of a symmetric form: returns (P, d) with
/// P^T Q P = diag(d). Columns of P are the diagonalising basis.
struct Diagonalization {
  Matrix basis;
  std::vector<Scalar> diagonal;
};

inline Diagonalization diagonalize_form(const Matrix& q) {
  assert(is_symmetric(q));
  const std::size_t n = q.rows();
  Matrix a = q;
  Matrix p = Matrix::identity(n);
  // Elementary congruence: column op on p, and the matching row+column op on a.
  auto add_multiple = [&](std::size_t dst, std::size_t src, const Scalar& f) {
    for (std::size_t r = 0; r < n; ++r) p(r, dst) += f * p(r, src);
    for (std::size_t k = 0; k < n; ++k) a(dst, k) += f * a(src, k);
    for (std::size_t k = 0; k < n; ++k) a(k, dst) += f * a(k, src);
  };
  auto swap_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < n; ++r) std::swap(p(r, i), p(r, j));
    for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t j = k + 1;
      while (j < n && sgn(a(j, j)) == 0) ++j;
      if (j < n) {
        swap_index(k, j);
      } else {
        j = k + 1;
        while (j < n && sgn(a(k, j)) == 0) ++j;
        if (j == n) continue;  // row k is already zero
        add_multiple(k, j, 1);  // a(k,k) becomes 2 a(k,j) != 0
      }
    }
    for (std::size_t j = k + 1; j < n; ++j)
      if (sgn(a(k, j)) != 0) add_multiple(j, k, -a(k, j) / a(k, k));
  }
  Diagonalization out{std::move(p), {}};
  for (std::size_t k = 0; k < n; ++k) out.diagonal.push_back(a(k, k));
  return out;
}

/// Rank of a large sparse system, by incremental elimination of sparse rows.
class SparseEchelon {
 public:
  using Row = std::map<std::size_t, Scalar>;

  /// Returns true when the row was independent of the rows inserted so far.
  bool insert(Row row) {
    while (!row.empty()) {
      auto lead = row.begin();
      auto it = pivots_.find(lead->first);
      if (it == pivots_.end()) {
        const Scalar inv = 1 / lead->second;
        for (auto& [c, x] : row) x *= inv;
        pivots_.emplace(lead->first, std::move(row));
        return true;
      }
      const Scalar f = lead->second;
      for (const auto& [c, x] : it->second) {
        auto& entry = row[c];
        entry -= f * x;
        if (sgn(entry) == 0) row.erase(c);
      }
    }
    return false;
  }

  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  std::map<std::size_t, Row> pivots_;
};

/// Pfaffian of a 2m x 2m skew matrix over any commutative ring T, by the
/// expansion along the lowest remaining index (memoised over index subsets).
template <typename T, typename Entry>
T pfaffian(std::size_t n, Entry entry) {
  assert(n % 2 == 0 && n < 32);
  std::map<std::uint32_t, T> memo;
  auto rec = [&](auto&& self, std::uint32_t mask) -> T {
    if (mask == 0) return T(1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    std::size_t i = 0;
    while (!(mask & (1u << i))) ++i;
    T total(0);
    int sign = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      const std::uint32_t rest = mask & ~(1u << i) & ~(1u << j);
      T term = entry(i, j) * self(self, rest);
      if (sign > 0)
        total = total + term;
      else
        total = total - term;
      sign = -sign;
    }
    memo.emplace(mask, total);
    return total;
  };
  return rec(rec, n == 0 ? 0u : static_cast<std::uint32_t>((1ull << n) - 1));
}

}  // namespace ak

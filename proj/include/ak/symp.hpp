#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ak/lie.hpp"

namespace ak {

/// Omega = sum X_i* ^ Y_i* on the basis {X_1..X_n, Y_1..Y_n}.
inline Matrix standard_omega(std::size_t n) {
  Matrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, n + i) = 1;
    m(n + i, i) = -1;
  }
  return m;
}

/// j(X_i) = Y_i, j(Y_i) = -X_i. Column k holds j(e_k).
inline Matrix standard_j(std::size_t n) {
  Matrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    m(n + i, i) = 1;
    m(i, n + i) = -1;
  }
  return m;
}

inline std::vector<std::string> standard_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("Y" + std::to_string(i));
  return names;
}

/// A Lie algebra with a nondegenerate 2-cocycle Omega and a positive compatible
/// j. Omega is a Gram matrix (Omega(e_a, e_b) = omega(a, b)); j acts on column
/// vectors. The metric g(u, v) = Omega(u, j v) is derived.
class SymplecticTriple {
 public:
  SymplecticTriple() = default;

  static SymplecticTriple build(LieAlgebra g, Matrix omega, Matrix j) {
    const std::size_t n = g.dim();
    if (omega.rows() != n || omega.cols() != n || j.rows() != n || j.cols() != n)
      throw Error(ErrorKind::DimensionMismatch, "Omega and J must be " + std::to_string(n) + "x" + std::to_string(n));
    if (!is_skew(omega)) throw Error(ErrorKind::NotSkew, "Omega is not skew-symmetric");
    if (n % 2 != 0 || rank(omega) != n) throw Error(ErrorKind::Degenerate, "Omega is degenerate");
    if (auto t = cocycle_violation(g, omega))
      throw Error(ErrorKind::CocycleViolation,
                  "cyclic sum Omega([a,b],c) != 0 on (" + g.name((*t)[0]) + ", " + g.name((*t)[1]) + ", " +
                      g.name((*t)[2]) + ")",
                  {(*t)[0], (*t)[1], (*t)[2]});
    if (!(j * j == -Matrix::identity(n))) throw Error(ErrorKind::NotAlmostComplex, "J^2 != -Id");
    if (!(j.transpose() * omega * j == omega)) throw Error(ErrorKind::NotCompatible, "Omega(J., J.) != Omega");
    Matrix metric = omega * j;
    const auto minors = leading_minors(metric);
    for (std::size_t k = 0; k < minors.size(); ++k)
      if (sgn(minors[k]) <= 0)
        throw Error(ErrorKind::NotPositive,
                    "metric Omega(., J.) fails positivity: leading minor of order " + std::to_string(k + 1) + " is " +
                        to_string(minors[k]),
                    {k + 1});
    SymplecticTriple t;
    t.g_ = std::move(g);
    t.omega_ = std::move(omega);
    t.j_ = std::move(j);
    t.metric_ = std::move(metric);
    return t;
  }

  /// First basis triple where the cocycle condition fails.
  static std::optional<std::array<std::size_t, 3>> cocycle_violation(const LieAlgebra& g, const Matrix& omega) {
    const std::size_t n = g.dim();
    auto om = [&](std::size_t a, std::size_t b, std::size_t c) {
      return g.structure_is_zero(a, b) ? Scalar(0) : dot(g.structure(a, b), omega.col(c));
    };
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c)
          if (sgn(om(a, b, c) + om(b, c, a) + om(c, a, b)) != 0) return std::array<std::size_t, 3>{a, b, c};
    return std::nullopt;
  }

  std::size_t dim() const noexcept { return g_.dim(); }
  const LieAlgebra& algebra() const noexcept { return g_; }
  const Matrix& omega() const noexcept { return omega_; }
  const Matrix& j() const noexcept { return j_; }
  const Matrix& metric() const noexcept { return metric_; }

  Vector apply_j(const Vector& v) const { return j_ * v; }
  Scalar omega_of(const Vector& u, const Vector& v) const { return bilinear(u, omega_, v); }
  Scalar metric_of(const Vector& u, const Vector& v) const { return bilinear(u, metric_, v); }

 private:
  LieAlgebra g_;
  Matrix omega_;
  Matrix j_;
  Matrix metric_;
};

inline SymplecticTriple build_triple(LieAlgebra g, Matrix omega, Matrix j) {
  return SymplecticTriple::build(std::move(g), std::move(omega), std::move(j));
}

inline const Matrix& metric_of(const SymplecticTriple& t) { return t.metric(); }

/// Triple with the standard Omega and j on {X_1..X_n, Y_1..Y_n}.
inline SymplecticTriple standard_triple(const LieAlgebra& g) {
  const std::size_t n = g.dim() / 2;
  return build_triple(g, standard_omega(n), standard_j(n));
}

}  // namespace ak

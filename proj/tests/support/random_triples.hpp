#pragma once

#include <random>
#include <string>
#include <vector>

#include "ak/ak.hpp"

namespace aktest {

using namespace ak;

inline Scalar small_rational(std::mt19937& rng, int range = 3) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 2);
  Scalar q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

/// Symplectic transvection x -> x + c Omega(v, x) v.
inline Matrix transvection(const Matrix& omega, const Vector& v, const Scalar& c) {
  const std::size_t d = omega.rows();
  const Vector w = omega.transpose() * v;  // w . x = Omega(v, x)
  Matrix t = Matrix::identity(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t k = 0; k < d; ++k) t(r, k) += c * v[r] * w[k];
  return t;
}

/// Random element of Sp(Omega) as a product of transvections, with its inverse.
inline std::pair<Matrix, Matrix> random_symplectic(std::mt19937& rng, const Matrix& omega, int steps = 3) {
  const std::size_t d = omega.rows();
  Matrix s = Matrix::identity(d), sinv = Matrix::identity(d);
  for (int i = 0; i < steps; ++i) {
    Vector v(d);
    for (auto& x : v) x = small_rational(rng, 2);
    const Scalar c = small_rational(rng, 2);
    s = transvection(omega, v, c) * s;
    sinv = sinv * transvection(omega, v, -c);
  }
  return {s, sinv};
}

/// Invertible integer matrix: unit lower times unit upper triangular.
inline std::pair<Matrix, Matrix> random_basis_change(std::mt19937& rng, std::size_t d) {
  std::uniform_int_distribution<int> e(-1, 1);
  Matrix l = Matrix::identity(d), u = Matrix::identity(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < r; ++c) {
      l(r, c) = e(rng);
      u(c, r) = e(rng);
    }
  const Matrix p = l * u;
  return {p, inverse(p)};
}

/// Transport a triple along the basis change e'_k = sum_i P_ik e_i.
inline SymplecticTriple change_basis(const SymplecticTriple& t, const Matrix& p, const Matrix& pinv) {
  const std::size_t d = t.dim();
  const auto& g = t.algebra();
  std::vector<Vector> table(d * d, zero_vector(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      table[a * d + b] = pinv * g.bracket(p.col(a), p.col(b));
      table[b * d + a] = scaled(-1, table[a * d + b]);
    }
  std::vector<std::string> names;
  for (std::size_t k = 0; k < d; ++k) names.push_back("f" + std::to_string(k + 1));
  auto h = LieAlgebra::from_structure_constants(names, table);
  return build_triple(std::move(h), p.transpose() * t.omega() * p, pinv * t.j() * p);
}

inline std::vector<SymplecticTriple> base_triples(std::size_t dim) {
  std::vector<SymplecticTriple> out;
  if (dim == 4) {
    for (const char* n : {"ex1", "ex2", "ex3", "ex4", "thurston(1)", "thurston(2)", "abelian(2)"})
      out.push_back(builtin(n).triple);
    const auto a1 = builtin("abelian(1)").triple;
    out.push_back(character_extension(a1, {1, 0}));
    out.push_back(character_extension(a1, {1, 2}));
  } else if (dim == 6) {
    out.push_back(builtin("dim6").triple);
    out.push_back(builtin("abelian(3)").triple);
    for (const char* n : {"ex1", "ex2", "ex3", "ex4"}) {
      const auto t = builtin(n).triple;
      out.push_back(product_extension(t));
      out.push_back(character_extension(t, default_character(t)));
    }
  } else {
    throw Error(ErrorKind::DimensionMismatch, "random triples only in dimension 4 or 6");
  }
  return out;
}

/// A validated triple: random base, j moved by a random symplectic map, then a
/// random change of basis of the whole structure.
inline SymplecticTriple random_triple(std::mt19937& rng, std::size_t dim) {
  static const std::vector<SymplecticTriple> bases4 = base_triples(4);
  static const std::vector<SymplecticTriple> bases6 = base_triples(6);
  const auto& bases = dim == 4 ? bases4 : bases6;
  const auto& base = bases[std::uniform_int_distribution<std::size_t>(0, bases.size() - 1)(rng)];
  const auto [s, sinv] = random_symplectic(rng, base.omega());
  const auto t = build_triple(base.algebra(), base.omega(), s * base.j() * sinv);
  const auto [p, pinv] = random_basis_change(rng, dim);
  return change_basis(t, p, pinv);
}

}  // namespace aktest

#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ak/linalg.hpp"

namespace ak {

/// [e_i, e_j] = coeffs, with i < j.
struct Bracket {
  std::size_t i = 0;
  std::size_t j = 0;
  Vector coeffs;
};

/// [a, b] = sum coeff * name, with basis elements addressed by label.
struct NamedBracket {
  std::string a;
  std::string b;
  std::vector<std::pair<std::string, Scalar>> terms;
};

/// Finite-dimensional real Lie algebra with rational structure constants.
/// Only [e_i, e_j] for i < j is stored; the other half is generated. Jacobi
/// is checked on every basis triple at construction.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  static LieAlgebra validate(std::size_t dim, std::vector<std::string> basis_names,
                             const std::vector<Bracket>& brackets) {
    if (basis_names.size() != dim)
      throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(dim) + " basis names, got " +
                                                    std::to_string(basis_names.size()));
    LieAlgebra g(std::move(basis_names));
    std::vector<bool> seen(g.upper_.size(), false);
    for (const auto& br : brackets) {
      if (br.i >= dim || br.j >= dim)
        throw Error(ErrorKind::DimensionMismatch, "bracket index out of range", {br.i, br.j});
      if (br.i >= br.j) throw Error(ErrorKind::Parse, "bracket entries need i < j", {br.i, br.j});
      if (br.coeffs.size() != dim)
        throw Error(ErrorKind::DimensionMismatch, "bracket coefficient vector has wrong length", {br.i, br.j});
      const auto slot = g.slot(br.i, br.j);
      if (seen[slot]) throw Error(ErrorKind::Parse, "bracket given twice", {br.i, br.j});
      seen[slot] = true;
      g.upper_[slot] = br.coeffs;
    }
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j)
        if (!ak::is_zero(g.upper_[g.slot(i, j)])) g.nonzero_.emplace_back(i, j);
    g.check_jacobi();
    return g;
  }

  static LieAlgebra from_named(std::vector<std::string> basis_names, const std::vector<NamedBracket>& brackets) {
    const std::size_t dim = basis_names.size();
    auto index = [&](const std::string& name) {
      for (std::size_t k = 0; k < dim; ++k)
        if (basis_names[k] == name) return k;
      throw Error(ErrorKind::Parse, "unknown basis element '" + name + "'");
    };
    std::vector<Bracket> list;
    for (const auto& nb : brackets) {
      std::size_t i = index(nb.a), j = index(nb.b);
      Vector v = zero_vector(dim);
      for (const auto& [name, coeff] : nb.terms) v[index(name)] += coeff;
      if (i > j) {
        std::swap(i, j);
        v = scaled(-1, v);
      }
      list.push_back({i, j, std::move(v)});
    }
    return validate(dim, std::move(basis_names), list);
  }

  /// Full table c[i*dim + j] = [e_i, e_j]; antisymmetry and Jacobi are verified.
  static LieAlgebra from_structure_constants(std::vector<std::string> basis_names, const std::vector<Vector>& table) {
    const std::size_t dim = basis_names.size();
    if (table.size() != dim * dim) throw Error(ErrorKind::DimensionMismatch, "structure table has wrong size");
    std::vector<Bracket> list;
    for (std::size_t i = 0; i < dim; ++i) {
      if (!ak::is_zero(table[i * dim + i])) throw Error(ErrorKind::NotSkew, "[e_i, e_i] != 0", {i, i});
      for (std::size_t j = i + 1; j < dim; ++j) {
        if (add(table[i * dim + j], table[j * dim + i]) != zero_vector(dim))
          throw Error(ErrorKind::NotSkew, "bracket is not antisymmetric", {i, j});
        if (!ak::is_zero(table[i * dim + j])) list.push_back({i, j, table[i * dim + j]});
      }
    }
    return validate(dim, std::move(basis_names), list);
  }

  std::size_t dim() const noexcept { return names_.size(); }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  /// [e_i, e_j]
  Vector structure(std::size_t i, std::size_t j) const {
    if (i == j) return zero_vector(dim());
    if (i < j) return upper_[slot(i, j)];
    return scaled(-1, upper_[slot(j, i)]);
  }

  bool structure_is_zero(std::size_t i, std::size_t j) const {
    if (i == j) return true;
    return ak::is_zero(upper_[i < j ? slot(i, j) : slot(j, i)]);
  }

  Vector bracket(const Vector& u, const Vector& v) const {
    Vector r = zero_vector(dim());
    for (const auto& [i, j] : nonzero_) {
      if (sgn(u[i]) == 0 && sgn(u[j]) == 0) continue;
      axpy(r, u[i] * v[j] - u[j] * v[i], upper_[slot(i, j)]);
    }
    return r;
  }

  /// Matrix of ad_u; column j is [u, e_j].
  Matrix ad(const Vector& u) const {
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) m.set_col(j, bracket(u, unit_vector(dim(), j)));
    return m;
  }

  std::vector<Bracket> nonzero_brackets() const {
    std::vector<Bracket> out;
    for (const auto& [i, j] : nonzero_) out.push_back({i, j, upper_[slot(i, j)]});
    return out;
  }

  bool is_abelian() const { return nonzero_.empty(); }

  /// Jacobi residual [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]].
  Vector jacobi_residual(std::size_t i, std::size_t j, std::size_t k) const {
    Vector r = bracket_with_basis(i, structure(j, k));
    axpy(r, 1, bracket_with_basis(j, structure(k, i)));
    axpy(r, 1, bracket_with_basis(k, structure(i, j)));
    return r;
  }

  /// First basis triple (i<j<k) violating Jacobi, if any.
  std::optional<std::array<std::size_t, 3>> jacobi_violation() const {
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i + 1; j < dim(); ++j)
        for (std::size_t k = j + 1; k < dim(); ++k)
          if (!ak::is_zero(jacobi_residual(i, j, k))) return std::array<std::size_t, 3>{i, j, k};
    return std::nullopt;
  }

 private:
  explicit LieAlgebra(std::vector<std::string> names)
      : names_(std::move(names)),
        upper_(names_.empty() ? 0 : names_.size() * (names_.size() - 1) / 2, zero_vector(names_.size())) {}

  std::size_t slot(std::size_t i, std::size_t j) const {
    // row-major index into the strict upper triangle
    const std::size_t n = dim();
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  }

  /// [e_i, w] using only the nonzero coordinates of w.
  Vector bracket_with_basis(std::size_t i, const Vector& w) const {
    Vector r = zero_vector(dim());
    for (std::size_t m = 0; m < dim(); ++m) {
      if (sgn(w[m]) == 0 || m == i) continue;
      if (i < m)
        axpy(r, w[m], upper_[slot(i, m)]);
      else
        axpy(r, -w[m], upper_[slot(m, i)]);
    }
    return r;
  }

  void check_jacobi() const {
    if (auto t = jacobi_violation()) {
      const auto [i, j, k] = *t;
      std::string residual;
      const Vector r = jacobi_residual(i, j, k);
      for (std::size_t m = 0; m < dim(); ++m)
        if (sgn(r[m]) != 0) residual += (residual.empty() ? "" : ", ") + names_[m] + ": " + to_string(r[m]);
      throw Error(ErrorKind::JacobiViolation,
                  "Jacobi identity fails on (" + names_[i] + ", " + names_[j] + ", " + names_[k] + "), residual {" +
                      residual + "}",
                  {i, j, k});
    }
  }

  std::vector<std::string> names_;
  std::vector<Vector> upper_;
  std::vector<std::pair<std::size_t, std::size_t>> nonzero_;
};

inline Subspace derived_subalgebra(const LieAlgebra& g) {
  std::vector<Vector> v;
  for (const auto& b : g.nonzero_brackets()) v.push_back(b.coeffs);
  return Subspace::span(g.dim(), v);
}

/// [g, s] for a subspace s.
inline Subspace bracket_span(const LieAlgebra& g, const Subspace& s) {
  std::vector<Vector> v;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (const auto& b : s.vectors()) v.push_back(g.bracket(unit_vector(g.dim(), i), b));
  return Subspace::span(g.dim(), v);
}

/// True iff [u, v] lies in s for every pair of basis vectors of s.
inline bool is_bracket_closed(const LieAlgebra& g, const Subspace& s) {
  const auto basis = s.vectors();
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      if (!s.contains(g.bracket(basis[a], basis[b]))) return false;
  return true;
}

struct NilpotencyReport {
  bool nilpotent = false;
  /// dims of [g,g], [g,[g,g]], ... until zero or stationary
  std::vector<std::size_t> lower_central_dims;
};

inline NilpotencyReport is_nilpotent(const LieAlgebra& g) {
  NilpotencyReport out;
  Subspace term = derived_subalgebra(g);
  out.lower_central_dims.push_back(term.dim());
  while (!term.is_zero()) {
    Subspace next = bracket_span(g, term);
    if (next.dim() == term.dim()) break;
    out.lower_central_dims.push_back(next.dim());
    term = std::move(next);
  }
  out.nilpotent = term.is_zero();
  return out;
}

/// Characters xi with xi([g,g]) = 0, as a subspace of the dual (dual-basis coordinates).
inline Subspace characters(const LieAlgebra& g) {
  const Subspace d = derived_subalgebra(g);
  if (d.is_zero()) return Subspace::full(g.dim());
  return kernel(d.basis());
}

/// Structure constants are held as rationals, so a rational basis always exists.
inline bool has_rational_basis(const LieAlgebra&) { return true; }

/// Malcev: a simply connected nilpotent group has a lattice iff its algebra has
/// a rational basis. Not applicable to non-nilpotent algebras.
struct LatticeCriterion {
  bool nilpotent = false;
  bool rational_basis = true;
  bool applicable = false;
  bool lattice_exists = false;
};

inline LatticeCriterion lattice_criterion(const LieAlgebra& g) {
  LatticeCriterion c;
  c.nilpotent = is_nilpotent(g).nilpotent;
  c.rational_basis = has_rational_basis(g);
  c.applicable = c.nilpotent;
  c.lattice_exists = c.nilpotent && c.rational_basis;
  return c;
}

}  // namespace ak

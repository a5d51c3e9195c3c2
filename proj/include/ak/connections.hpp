#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ak/nijenhuis.hpp"

namespace ak {

enum class ConnectionKind { LeviCivita, Symplectic, Chern };

constexpr std::string_view connection_label(ConnectionKind k) {
  switch (k) {
    case ConnectionKind::LeviCivita: return "levi_civita";
    case ConnectionKind::Symplectic: return "symplectic";
    case ConnectionKind::Chern: return "chern";
  }
  return "";
}

/// Invariant linear connection. gamma[i] is the matrix of Z -> nabla_{e_i} Z,
/// so its column j is nabla_{e_i} e_j.
struct Connection {
  ConnectionKind kind = ConnectionKind::LeviCivita;
  std::vector<Matrix> gamma;

  std::size_t dim() const { return gamma.size(); }

  /// Matrix of Z -> nabla_u Z.
  Matrix along(const Vector& u) const {
    Matrix m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      if (sgn(u[i]) != 0) m = m + u[i] * gamma[i];
    return m;
  }

  Vector covariant(const Vector& u, const Vector& v) const { return along(u) * v; }

  friend bool operator==(const Connection& a, const Connection& b) { return a.gamma == b.gamma; }
};

/// (nabla_u J) as a matrix: nabla_u (J v) - J nabla_u v.
inline Matrix nabla_j(const Connection& c, const Matrix& j, const Vector& u) {
  const Matrix l = c.along(u);
  return l * j - j * l;
}

inline Tensor3 torsion(const Connection& c, const LieAlgebra& g) {
  return Tensor3::from_basis(c.dim(), [&](std::size_t i, std::size_t j) {
    Vector t = sub(c.gamma[i].col(j), c.gamma[j].col(i));
    axpy(t, -1, g.structure(i, j));
    return t;
  });
}

/// Tests for the defining properties of each connection.
inline bool preserves_form(const Connection& c, const Matrix& form) {
  for (const auto& l : c.gamma)
    if (!(l.transpose() * form + form * l).is_zero()) return false;
  return true;
}

inline bool preserves_j(const Connection& c, const Matrix& j) {
  for (const auto& l : c.gamma)
    if (!(l * j == j * l)) return false;
  return true;
}

namespace detail {
inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InternalInvariantViolation, what);
}
}  // namespace detail

/// Koszul formula for left-invariant fields:
/// 2 g(nabla_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y).
inline Connection levi_civita(const SymplecticTriple& t) {
  const std::size_t d = t.dim();
  const auto& g = t.algebra();
  const Matrix ginv = inverse(t.metric());
  Connection c{ConnectionKind::LeviCivita, std::vector<Matrix>(d, Matrix(d, d))};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vector rhs = zero_vector(d);
      for (std::size_t k = 0; k < d; ++k) {
        Scalar s = 0;
        if (!g.structure_is_zero(i, j)) s += t.metric_of(g.structure(i, j), unit_vector(d, k));
        if (!g.structure_is_zero(j, k)) s -= t.metric_of(g.structure(j, k), unit_vector(d, i));
        if (!g.structure_is_zero(k, i)) s += t.metric_of(g.structure(k, i), unit_vector(d, j));
        rhs[k] = s / 2;
      }
      c.gamma[i].set_col(j, ginv * rhs);
    }
  detail::require(preserves_form(c, t.metric()), "Levi-Civita connection does not preserve g");
  detail::require(torsion(c, g).is_zero(), "Levi-Civita connection has torsion");
  return c;
}

/// nabla^s_X Y = nabla_X Y - 1/3 J (nabla_X J) Y - 1/3 J (nabla_Y J) X
inline Connection symplectic_connection(const SymplecticTriple& t, const Connection& lc) {
  const std::size_t d = t.dim();
  const Matrix& j = t.j();
  std::vector<Matrix> nj;
  for (std::size_t i = 0; i < d; ++i) nj.push_back(j * nabla_j(lc, j, unit_vector(d, i)));
  Connection c{ConnectionKind::Symplectic, lc.gamma};
  const Scalar third(1, 3);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      Vector col = c.gamma[i].col(k);
      axpy(col, -third, nj[i].col(k));
      axpy(col, -third, nj[k].col(i));
      c.gamma[i].set_col(k, col);
    }
  detail::require(preserves_form(c, t.omega()), "symplectic connection does not preserve Omega");
  detail::require(torsion(c, t.algebra()).is_zero(), "symplectic connection has torsion");
  return c;
}

inline Connection symplectic_connection(const SymplecticTriple& t) { return symplectic_connection(t, levi_civita(t)); }

/// Torsion identity for any J-parallel connection:
/// T(JX,JY) - J T(JX,Y) - J T(X,JY) - T(X,Y) = -N(X,Y).
inline bool torsion_identity_holds(const Tensor3& tor, const Tensor3& n, const Matrix& j) {
  const std::size_t d = n.dim();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const Vector ja = j.col(a), jb = j.col(b);
      const Vector ea = unit_vector(d, a), eb = unit_vector(d, b);
      Vector lhs = tor.apply(ja, jb);
      axpy(lhs, -1, j * tor.apply(ja, eb));
      axpy(lhs, -1, j * tor.apply(ea, jb));
      axpy(lhs, -1, tor.at(a, b));
      if (add(lhs, n.at(a, b)) != zero_vector(d)) return false;
    }
  return true;
}

/// nabla^C_X Y = nabla_X Y - 1/2 J (nabla_X J) Y
inline Connection chern_connection(const SymplecticTriple& t, const Connection& lc) {
  const std::size_t d = t.dim();
  const Matrix& j = t.j();
  Connection c{ConnectionKind::Chern, lc.gamma};
  for (std::size_t i = 0; i < d; ++i)
    c.gamma[i] = c.gamma[i] - Scalar(1, 2) * (j * nabla_j(lc, j, unit_vector(d, i)));
  const Tensor3 n = nijenhuis_tensor(t);
  const Tensor3 tor = torsion(c, t.algebra());
  detail::require(preserves_form(c, t.omega()), "Chern connection does not preserve Omega");
  detail::require(preserves_j(c, j), "Chern connection does not preserve J");
  detail::require(tor == Tensor3::from_basis(d, [&](std::size_t a, std::size_t b) {
                    return scaled(Scalar(1, 4), n.at(a, b));
                  }),
                  "Chern torsion differs from N/4");
  detail::require(torsion_identity_holds(tor, n, j), "torsion identity fails for the Chern connection");
  return c;
}

inline Connection chern_connection(const SymplecticTriple& t) { return chern_connection(t, levi_civita(t)); }

/// Outcome of the two identities relating nabla J (Levi-Civita) and N.
struct NablaJChecks {
  bool n_relation = true;       // 2 Omega((nabla_X J) Y, Z) = Omega(N(Y,Z), J X)
  bool j_antilinearity = true;  // nabla_{JX} J = -J nabla_X J
  std::vector<std::size_t> first_failure;
  bool all() const { return n_relation && j_antilinearity; }
};

inline NablaJChecks nabla_J_checks(const SymplecticTriple& t, const Connection& lc) {
  NablaJChecks r;
  const std::size_t d = t.dim();
  const Matrix& j = t.j();
  const Tensor3 n = nijenhuis_tensor(t);
  std::vector<Matrix> nj;
  for (std::size_t x = 0; x < d; ++x) nj.push_back(nabla_j(lc, j, unit_vector(d, x)));
  for (std::size_t x = 0; x < d; ++x) {
    const Vector jx = j.col(x);
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z) {
        const Scalar lhs = 2 * dot(nj[x].col(y), t.omega().col(z));
        const Scalar rhs = t.omega_of(n.at(y, z), jx);
        if (lhs != rhs && r.n_relation) {
          r.n_relation = false;
          r.first_failure = {x, y, z};
        }
      }
    if (!(nabla_j(lc, j, jx) == -(j * nj[x])) && r.j_antilinearity) {
      r.j_antilinearity = false;
      if (r.first_failure.empty()) r.first_failure = {x};
    }
  }
  return r;
}

inline NablaJChecks nabla_J_checks(const SymplecticTriple& t) { return nabla_J_checks(t, levi_civita(t)); }

/// Throws IdentityViolation naming the first failing identity.
inline void require_nabla_J_identities(const SymplecticTriple& t) {
  const auto r = nabla_J_checks(t);
  if (!r.n_relation)
    throw Error(ErrorKind::IdentityViolation, "2 Omega((nabla_X J)Y, Z) = Omega(N(Y,Z), JX) fails", r.first_failure);
  if (!r.j_antilinearity)
    throw Error(ErrorKind::IdentityViolation, "nabla_{JX} J = -J nabla_X J fails", r.first_failure);
}

/// Element a + b eps with eps^2 = 0; carries a first derivative through a polynomial.
struct Dual {
  Scalar value = 0;
  Scalar slope = 0;
  Dual() = default;
  Dual(int v) : value(v) {}  // NOLINT: literal promotion used by pfaffian<T>
  Dual(Scalar v, Scalar s) : value(std::move(v)), slope(std::move(s)) {}
  friend Dual operator+(const Dual& a, const Dual& b) { return {a.value + b.value, a.slope + b.slope}; }
  friend Dual operator-(const Dual& a, const Dual& b) { return {a.value - b.value, a.slope - b.slope}; }
  friend Dual operator*(const Dual& a, const Dual& b) {
    return {a.value * b.value, a.value * b.slope + a.slope * b.value};
  }
};

/// n * (rho ^ omega^{n-1}) / omega^n for 2-forms given as Gram matrices,
/// evaluated on e_1 ^ ... ^ e_2n. Both top forms are the Pfaffian of
/// omega + t rho at t = 0 (value) and its t-derivative, up to the same factor.
inline Scalar trace_against_omega(const Matrix& rho, const Matrix& omega) {
  const std::size_t d = omega.rows();
  if (d == 0) return 0;
  const Dual pf = pfaffian<Dual>(d, [&](std::size_t a, std::size_t b) { return Dual(omega(a, b), rho(a, b)); });
  if (sgn(pf.value) == 0) throw Error(ErrorKind::SingularGram, "omega^n vanishes");
  return pf.slope / pf.value;
}

/// Real and imaginary part of the complex trace of a J-linear endomorphism
/// of (R^2n, J) viewed as C^n.
inline std::pair<Scalar, Scalar> complex_trace(const Matrix& a, const Matrix& j) {
  const std::size_t d = a.rows();
  const std::size_t n = d / 2;
  // complex basis v_1..v_n such that {v_k, J v_k} is a real basis
  std::vector<Vector> vs;
  std::vector<Vector> real_basis;
  for (std::size_t i = 0; i < d && vs.size() < n; ++i) {
    auto candidate = real_basis;
    candidate.push_back(unit_vector(d, i));
    candidate.push_back(j * unit_vector(d, i));
    if (Subspace::span(d, candidate).dim() == candidate.size()) {
      vs.push_back(unit_vector(d, i));
      real_basis = std::move(candidate);
    }
  }
  Matrix p(d, d);
  for (std::size_t k = 0; k < n; ++k) {
    p.set_col(k, vs[k]);
    p.set_col(n + k, j * vs[k]);
  }
  const Matrix m = inverse(p) * a * p;
  Scalar re = 0, im = 0;
  for (std::size_t k = 0; k < n; ++k) {
    re += m(k, k);
    im += m(n + k, k);
  }
  return {re, im};
}

struct CurvatureSummary {
  std::vector<Matrix> riemann;  // riemann[i*d + j] = R(e_i, e_j) acting on Z
  Matrix ricci;
  Scalar scalar = 0;
  Matrix chern_ricci;
  Scalar hermitian_scalar = 0;
  bool ricci_j_invariant = false;
  std::optional<Scalar> chern_ricci_factor;  // lambda with ChRic = lambda Omega, when one exists
};

/// R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y] on invariant fields.
inline std::vector<Matrix> curvature(const Connection& c, const LieAlgebra& g) {
  const std::size_t d = c.dim();
  std::vector<Matrix> r(d * d, Matrix(d, d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = i + 1; k < d; ++k) {
      Matrix rik = commutator(c.gamma[i], c.gamma[k]);
      if (!g.structure_is_zero(i, k)) rik = rik - c.along(g.structure(i, k));
      r[k * d + i] = -rik;
      r[i * d + k] = std::move(rik);
    }
  return r;
}

/// Ric(X,Y) = tr(Z -> R(Z,X)Y)
inline Matrix ricci_of(const std::vector<Matrix>& riemann, std::size_t d) {
  Matrix ric(d, d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      Scalar s = 0;
      for (std::size_t z = 0; z < d; ++z) s += riemann[z * d + x](z, y);
      ric(x, y) = s;
    }
  return ric;
}

/// ChRic(X,Y) = tr_R (J R^C(X,Y))
inline Matrix chern_ricci_of(const std::vector<Matrix>& chern_riemann, const Matrix& j) {
  const std::size_t d = j.rows();
  Matrix rho(d, d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) rho(x, y) = (j * chern_riemann[x * d + y]).trace();
  return rho;
}

inline std::optional<Scalar> proportionality_factor(const Matrix& a, const Matrix& b) {
  std::optional<Scalar> lambda;
  for (std::size_t r = 0; r < b.rows() && !lambda; ++r)
    for (std::size_t c = 0; c < b.cols() && !lambda; ++c)
      if (sgn(b(r, c)) != 0) lambda = a(r, c) / b(r, c);
  if (!lambda) return a.is_zero() ? std::optional<Scalar>(0) : std::nullopt;
  if (!(a == *lambda * b)) return std::nullopt;
  return lambda;
}

/// Curvature of `c` together with the Chern-Ricci form and the Hermitian
/// scalar curvature of the triple.
inline CurvatureSummary curvature_summary(const SymplecticTriple& t, const Connection& c) {
  const std::size_t d = t.dim();
  const auto& g = t.algebra();
  CurvatureSummary s;
  s.riemann = curvature(c, g);
  s.ricci = ricci_of(s.riemann, d);
  const Matrix ginv = inverse(t.metric());
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) s.scalar += ginv(a, b) * s.ricci(a, b);
  s.ricci_j_invariant = t.j().transpose() * s.ricci * t.j() == s.ricci;

  const auto chern_riemann = c.kind == ConnectionKind::Chern ? s.riemann : curvature(chern_connection(t), g);
  s.chern_ricci = chern_ricci_of(chern_riemann, t.j());
  detail::require(is_skew(s.chern_ricci), "Chern-Ricci form is not skew");
  s.hermitian_scalar = trace_against_omega(s.chern_ricci, t.omega());
  s.chern_ricci_factor = proportionality_factor(s.chern_ricci, t.omega());
  return s;
}

inline CurvatureSummary curvature_summary(const SymplecticTriple& t) { return curvature_summary(t, levi_civita(t)); }

/// Covariant derivative of N along the Levi-Civita connection, with the
/// parallelism predicates derived from it.
struct NablaNReport {
  std::vector<Tensor3> nabla_n;  // nabla_n[i] = (nabla_{e_i} N)
  bool nabla_N_zero = true;
  bool image_parallel = true;
  bool image_perp_parallel = true;
  std::string label;
};

inline bool is_parallel(const Connection& c, const Subspace& s) {
  for (const auto& l : c.gamma)
    for (const auto& v : s.vectors())
      if (!s.contains(l * v)) return false;
  return true;
}

inline NablaNReport covariant_derivative_N(const SymplecticTriple& t, const Connection& lc) {
  const std::size_t d = t.dim();
  const Tensor3 n = nijenhuis_tensor(t);
  NablaNReport r;
  for (std::size_t i = 0; i < d; ++i) {
    const Matrix& l = lc.gamma[i];
    Tensor3 dn = Tensor3::from_basis(d, [&](std::size_t a, std::size_t b) {
      Vector v = l * n.at(a, b);
      axpy(v, -1, n.apply(l.col(a), unit_vector(d, b)));
      axpy(v, -1, n.apply(unit_vector(d, a), l.col(b)));
      return v;
    });
    if (!dn.is_zero()) r.nabla_N_zero = false;
    r.nabla_n.push_back(std::move(dn));
  }
  const Subspace image = image_distribution(n);
  const Subspace perp = complement(image, t.metric());
  r.image_parallel = is_parallel(lc, image);
  r.image_perp_parallel = is_parallel(lc, perp);
  detail::require(!(r.nabla_N_zero && !n.is_zero()), "nabla N = 0 observed with N != 0");
  detail::require(r.image_parallel == r.image_perp_parallel, "Im N and its complement disagree on parallelism");
  if (n.is_zero())
    r.label = "kahler";
  else if (image.is_full())
    r.label = "maximally non-integrable";
  else if (r.image_parallel)
    r.label = "local product: Kahler x maximally-non-integrable candidate";
  return r;
}

inline NablaNReport covariant_derivative_N(const SymplecticTriple& t) { return covariant_derivative_N(t, levi_civita(t)); }

}  // namespace ak

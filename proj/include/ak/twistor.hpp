#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ak/lie.hpp"

namespace ak {

/// so(1,2n) as (2n+1)x(2n+1) matrices A = [[0, u^T], [u, B]] with B skew,
/// split as u(n) + q + p with respect to j0 = [[0,-I],[I,0]].
///
/// Ambient basis order: p_1..p_2n (A = E_0i + E_i0), then r_ab = E_ab - E_ba
/// for 1 <= a < b <= 2n.
struct TwistorModel {
  std::size_t n = 0;
  LieAlgebra ambient;
  Subspace u_n, q, p;
  Subspace qp;          // q + p
  Matrix j0;            // 2n x 2n
  Matrix kks;           // on ambient coordinates; degenerate exactly along u(n)
  std::vector<Matrix> basis;  // matrix of each ambient basis element

  std::size_t size() const { return 2 * n + 1; }

  Matrix to_matrix(const Vector& coords) const {
    Matrix m(size(), size());
    for (std::size_t k = 0; k < coords.size(); ++k)
      if (sgn(coords[k]) != 0) m = m + coords[k] * basis[k];
    return m;
  }

  Vector to_coords(const Matrix& a) const {
    const std::size_t d = 2 * n;
    Vector v;
    v.reserve(ambient.dim());
    for (std::size_t i = 1; i <= d; ++i) v.push_back(a(0, i));
    for (std::size_t x = 1; x <= d; ++x)
      for (std::size_t y = x + 1; y <= d; ++y) v.push_back(a(x, y));
    return v;
  }

  /// The p-part u and the lower block B of an element.
  std::pair<Vector, Matrix> split(const Matrix& a) const {
    const std::size_t d = 2 * n;
    Vector u(d);
    Matrix b(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      u[i] = a(i + 1, 0);
      for (std::size_t k = 0; k < d; ++k) b(i, k) = a(i + 1, k + 1);
    }
    return {u, b};
  }

  Matrix assemble(const Vector& u, const Matrix& b) const {
    Matrix a(size(), size());
    for (std::size_t i = 0; i < 2 * n; ++i) {
      a(0, i + 1) = u[i];
      a(i + 1, 0) = u[i];
      for (std::size_t k = 0; k < 2 * n; ++k) a(i + 1, k + 1) = b(i, k);
    }
    return a;
  }

  /// Components of B commuting and anticommuting with j0.
  Matrix u_part(const Matrix& b) const { return Scalar(1, 2) * (b - j0 * b * j0); }
  Matrix q_part(const Matrix& b) const { return Scalar(1, 2) * (b + j0 * b * j0); }

  /// Projection onto q + p along u(n).
  Matrix project(const Matrix& a) const {
    auto [u, b] = split(a);
    return assemble(u, q_part(b));
  }
};

inline TwistorModel build_twistor_model(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::NonpositiveParameter, "twistor model needs n >= 1");
  TwistorModel m;
  m.n = n;
  const std::size_t d = 2 * n, s = d + 1;
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= d; ++i) {
    Matrix a(s, s);
    a(0, i) = 1;
    a(i, 0) = 1;
    m.basis.push_back(std::move(a));
    names.push_back("p" + std::to_string(i));
  }
  for (std::size_t x = 1; x <= d; ++x)
    for (std::size_t y = x + 1; y <= d; ++y) {
      Matrix a(s, s);
      a(x, y) = 1;
      a(y, x) = -1;
      m.basis.push_back(std::move(a));
      names.push_back("r" + std::to_string(x) + "_" + std::to_string(y));
    }
  m.j0 = Matrix(d, d);
  for (std::size_t i = 0; i < n; ++i) {
    m.j0(n + i, i) = 1;
    m.j0(i, n + i) = -1;
  }

  const std::size_t dim = m.basis.size();
  std::vector<Vector> table(dim * dim, zero_vector(dim));
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a + 1; b < dim; ++b) {
      table[a * dim + b] = m.to_coords(commutator(m.basis[a], m.basis[b]));
      table[b * dim + a] = scaled(-1, table[a * dim + b]);
    }
  m.ambient = LieAlgebra::from_structure_constants(names, table);

  std::vector<Vector> us, qs, ps;
  for (std::size_t k = 0; k < dim; ++k) {
    auto [u, b] = m.split(m.basis[k]);
    if (k < d) {
      ps.push_back(m.to_coords(m.basis[k]));
      continue;
    }
    us.push_back(m.to_coords(m.assemble(zero_vector(d), m.u_part(b))));
    qs.push_back(m.to_coords(m.assemble(zero_vector(d), m.q_part(b))));
  }
  m.u_n = Subspace::span(dim, us);
  m.q = Subspace::span(dim, qs);
  m.p = Subspace::span(dim, ps);
  m.qp = sum(m.q, m.p);

  Matrix j0big(s, s);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) j0big(i + 1, k + 1) = m.j0(i, k);
  m.kks = Matrix(dim, dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) m.kks(a, b) = -(j0big * commutator(m.basis[a], m.basis[b])).trace();

  if (m.u_n.dim() + m.q.dim() + m.p.dim() != dim || !sum(m.u_n, m.qp).is_full())
    throw Error(ErrorKind::InternalInvariantViolation, "so(1,2n) is not the direct sum u(n) + q + p");
  return m;
}

/// J0 on a matrix element: (u, B) -> (sign j0 u, j0 B_q); zero on u(n).
inline Matrix twistor_J_apply(const TwistorModel& m, int sign, const Matrix& a) {
  auto [u, b] = m.split(a);
  return m.assemble(scaled(sign, m.j0 * u), m.j0 * m.q_part(b));
}

/// Matrix of J0^sign on ambient coordinates.
inline Matrix twistor_J(const TwistorModel& m, int sign) {
  const std::size_t dim = m.ambient.dim();
  Matrix j(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) j.set_col(k, m.to_coords(twistor_J_apply(m, sign, m.basis[k])));
  return j;
}

inline Matrix twistor_N_matrix(const TwistorModel& m, int sign, const Matrix& a, const Matrix& b) {
  const Matrix ja = twistor_J_apply(m, sign, a), jb = twistor_J_apply(m, sign, b);
  return commutator(ja, jb) - twistor_J_apply(m, sign, commutator(ja, b)) -
         twistor_J_apply(m, sign, commutator(a, jb)) - commutator(a, b);
}

struct TwistorNijenhuis {
  int sign = 1;
  std::vector<Vector> values;  // projected N on basis pairs, values[a*dim + b]
  Subspace image;              // span of all projected values
  Subspace image_pp;           // span over p x p pairs only
  bool integrable = false;
  bool maximally_non_integrable = false;
};

inline TwistorNijenhuis twistor_nijenhuis(const TwistorModel& m, int sign) {
  const std::size_t dim = m.ambient.dim();
  const std::size_t d = 2 * m.n;
  TwistorNijenhuis r;
  r.sign = sign;
  r.values.assign(dim * dim, zero_vector(dim));
  std::vector<Vector> all, pp;
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a + 1; b < dim; ++b) {
      Vector v = m.to_coords(m.project(twistor_N_matrix(m, sign, m.basis[a], m.basis[b])));
      r.values[b * dim + a] = scaled(-1, v);
      if (!is_zero(v)) {
        all.push_back(v);
        if (a < d && b < d) pp.push_back(v);
      }
      r.values[a * dim + b] = std::move(v);
    }
  r.image = Subspace::span(dim, all);
  r.image_pp = Subspace::span(dim, pp);
  r.integrable = r.image.is_zero();
  r.maximally_non_integrable = r.image == m.qp;
  return r;
}

/// Closed forms of the projected N(A,A') for A = (u,B), A' = (v,C) with B, C in q:
/// w = (s-1)(2Bv - 2Cu), D = (s-1)(u v^T - v u^T - j0u (j0v)^T + j0v (j0u)^T).
inline Matrix twistor_N_closed_form(const TwistorModel& m, int sign, const Vector& u, const Matrix& b,
                                    const Vector& v, const Matrix& c) {
  const Scalar f = sign - 1;
  const std::size_t d = 2 * m.n;
  auto outer = [d](const Vector& x, const Vector& y) {
    Matrix o(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) o(i, k) = x[i] * y[k];
    return o;
  };
  const Vector ju = m.j0 * u, jv = m.j0 * v;
  Vector w = sub(scaled(2, b * v), scaled(2, c * u));
  const Matrix dd = outer(u, v) - outer(v, u) - outer(ju, jv) + outer(jv, ju);
  return m.assemble(scaled(f, w), f * dd);
}

struct PositivityReport {
  int sign = -1;
  std::vector<Scalar> diagonal;  // of the form X -> kks(X, J X) on q + p
  bool positive = false;
  std::optional<Vector> witness;  // ambient coordinates with kks(X, JX) <= 0
  Scalar witness_value = 0;
  bool compatible = false;        // kks(J., J.) = kks
};

/// Restriction of an ambient endomorphism preserving q + p, in the basis of qp.
inline Matrix restrict_to_qp(const TwistorModel& m, const Matrix& endo) {
  const auto vs = m.qp.vectors();
  Matrix r(vs.size(), vs.size());
  for (std::size_t k = 0; k < vs.size(); ++k) {
    const Vector image = endo * vs[k];
    if (!m.qp.contains(image)) throw Error(ErrorKind::InternalInvariantViolation, "J does not preserve q + p");
    r.set_col(k, m.qp.coordinates(image));
  }
  return r;
}

inline Matrix kks_on_qp(const TwistorModel& m) {
  const Matrix b = Matrix::from_cols(m.qp.vectors(), m.ambient.dim());
  return b.transpose() * m.kks * b;
}

inline PositivityReport positivity_report(const TwistorModel& m, int sign) {
  PositivityReport r;
  r.sign = sign;
  const Matrix k = kks_on_qp(m);
  const Matrix j = restrict_to_qp(m, twistor_J(m, sign));
  r.compatible = j.transpose() * k * j == k;
  const Matrix q = k * j;  // q(x, y) = kks(x, J y)
  const Matrix sym = Scalar(1, 2) * (q + q.transpose());
  const auto diag = diagonalize_form(sym);
  r.diagonal = diag.diagonal;
  r.positive = true;
  for (std::size_t i = 0; i < r.diagonal.size(); ++i) {
    if (sgn(r.diagonal[i]) > 0) continue;
    r.positive = false;
    if (!r.witness) {
      const Vector x = diag.basis.col(i);
      Vector amb = zero_vector(m.ambient.dim());
      const auto vs = m.qp.vectors();
      for (std::size_t c = 0; c < vs.size(); ++c) axpy(amb, x[c], vs[c]);
      r.witness = amb;
      r.witness_value = bilinear(x, q, x);
    }
  }
  return r;
}

/// J^- positivity and an explicit J^+ non-positivity witness.
struct TwistorPositivity {
  PositivityReport minus;
  PositivityReport plus;
};

inline TwistorPositivity positivity_report(const TwistorModel& m) {
  TwistorPositivity r{positivity_report(m, -1), positivity_report(m, +1)};
  if (!r.plus.witness || sgn(r.plus.witness_value) > 0)
    throw Error(ErrorKind::NoWitnessFound, "no vector with kks(X, J+ X) <= 0 found");
  return r;
}

}  // namespace ak

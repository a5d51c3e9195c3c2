#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "ak/symp.hpp"

namespace ak {

/// Vector-valued bilinear map on Q^dim stored by its values on basis pairs.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t dim) : dim_(dim), values_(dim * dim, zero_vector(dim)) {}

  template <typename F>
  static Tensor3 from_basis(std::size_t dim, F&& f) {
    Tensor3 t(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) t.at(i, j) = f(i, j);
    return t;
  }

  std::size_t dim() const noexcept { return dim_; }
  const Vector& at(std::size_t i, std::size_t j) const { return values_[i * dim_ + j]; }
  Vector& at(std::size_t i, std::size_t j) { return values_[i * dim_ + j]; }

  Vector apply(const Vector& u, const Vector& v) const {
    Vector r = zero_vector(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (sgn(u[i]) == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        if (sgn(v[j]) != 0) axpy(r, u[i] * v[j], at(i, j));
    }
    return r;
  }

  bool is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const Vector& v) { return ak::is_zero(v); });
  }

  const std::vector<Vector>& values() const noexcept { return values_; }

  friend bool operator==(const Tensor3& a, const Tensor3& b) { return a.dim_ == b.dim_ && a.values_ == b.values_; }

 private:
  std::size_t dim_ = 0;
  std::vector<Vector> values_;
};

/// N(u,v) = [ju,jv] - j[ju,v] - j[u,jv] - [u,v] on invariant fields.
inline Vector nijenhuis_of(const LieAlgebra& g, const Matrix& j, const Vector& u, const Vector& v) {
  const Vector ju = j * u;
  const Vector jv = j * v;
  Vector r = g.bracket(ju, jv);
  axpy(r, -1, j * g.bracket(ju, v));
  axpy(r, -1, j * g.bracket(u, jv));
  axpy(r, -1, g.bracket(u, v));
  return r;
}

inline Tensor3 nijenhuis_tensor(const SymplecticTriple& t) {
  const std::size_t n = t.dim();
  Tensor3 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k) {
      out.at(i, k) = nijenhuis_of(t.algebra(), t.j(), unit_vector(n, i), unit_vector(n, k));
      out.at(k, i) = scaled(-1, out.at(i, k));
    }
  return out;
}

inline Subspace image_distribution(const Tensor3& n) { return Subspace::span(n.dim(), n.values()); }

/// { v : N(v, w) = 0 for all w }
inline Subspace kernel_distribution(const Tensor3& n) {
  const std::size_t d = n.dim();
  // rows indexed by (w, component), columns by the coordinate of v
  Matrix m(d * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t w = 0; w < d; ++w)
      for (std::size_t c = 0; c < d; ++c) m(w * d + c, i) = n.at(i, w)[c];
  return kernel(m);
}

/// Invariant distributions are involutive iff the subspace is bracket-closed.
inline bool is_involutive(const Subspace& s, const LieAlgebra& g) { return is_bracket_closed(g, s); }

/// Full contraction with g^{-1} on every slot, summing over all ordered pairs.
inline Scalar norm_sq(const Tensor3& n, const SymplecticTriple& t) {
  const std::size_t d = n.dim();
  const Matrix ginv = inverse(t.metric());
  Scalar total = 0;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Vector raised = zero_vector(d);  // sum_ij g^{ai} g^{bj} N(e_i, e_j)
      for (std::size_t i = 0; i < d; ++i) {
        if (sgn(ginv(a, i)) == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
          if (sgn(ginv(b, j)) != 0) axpy(raised, ginv(a, i) * ginv(b, j), n.at(i, j));
      }
      if (!is_zero(raised)) total += t.metric_of(n.at(a, b), raised);
    }
  return total;
}

/// Pass/fail of the algebraic identities every Nijenhuis tensor satisfies.
struct TensorIdentities {
  bool antisymmetric = true;
  bool j_antilinear = true;  // N(ju, v) = -j N(u, v)
  bool cyclic = true;        // sum_cyc Omega(N(u,v), w) = 0
  bool all() const { return antisymmetric && j_antilinear && cyclic; }
};

inline TensorIdentities check_tensor_identities(const Tensor3& n, const SymplecticTriple& t) {
  TensorIdentities r;
  const std::size_t d = n.dim();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      if (add(n.at(a, b), n.at(b, a)) != zero_vector(d)) r.antisymmetric = false;
      const Vector lhs = n.apply(t.j().col(a), unit_vector(d, b));
      if (add(lhs, t.apply_j(n.at(a, b))) != zero_vector(d)) r.j_antilinear = false;
      for (std::size_t c = 0; c < d; ++c) {
        const Scalar cyc = dot(n.at(a, b), t.omega().col(c)) +
                           dot(n.at(b, c), t.omega().col(a)) + dot(n.at(c, a), t.omega().col(b));
        if (sgn(cyc) != 0) r.cyclic = false;
      }
    }
  return r;
}

struct DistributionReport {
  Subspace image;
  Subspace image_perp;
  Subspace kernel;
  bool image_involutive = true;
  bool perp_involutive = true;
  bool maximally_non_integrable = false;
  bool integrable = true;
  Scalar norm_sq_N = 0;
};

/// Image/kernel distributions with their involutivity, and the structural
/// propositions they must satisfy. A failed proposition on a validated triple
/// is reported as InternalInvariantViolation.
inline DistributionReport classify(const SymplecticTriple& t, const Tensor3& n) {
  DistributionReport r;
  const std::size_t d = t.dim();
  r.image = image_distribution(n);
  r.kernel = kernel_distribution(n);
  r.image_perp = complement(r.image, t.metric());
  r.image_involutive = is_involutive(r.image, t.algebra());
  r.perp_involutive = is_involutive(r.image_perp, t.algebra());
  r.norm_sq_N = norm_sq(n, t);
  r.integrable = n.is_zero();
  r.maximally_non_integrable = d > 0 && r.image.is_full();

  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::InternalInvariantViolation, what);
  };
  require(r.image_perp == complement(r.image, t.omega()), "g_J- and Omega-complements of Im N differ");
  for (const auto& v : r.image.vectors()) require(r.image.contains(t.apply_j(v)), "Im N is not J-stable");
  require(r.image.dim() % 2 == 0, "Im N has odd dimension");
  require(r.image_perp.contains(r.kernel), "Ker N is not contained in (Im N)^perp");
  if (d == 4) require(r.image.dim() <= 2, "dim Im N > 2 in dimension 4");
  require((r.image.dim() == 2) == (d >= 4 && r.kernel.dim() == d - 4), "dim Im N = 2 <=> dim Ker N = dim - 4 fails");
  require(r.integrable == (sgn(r.norm_sq_N) == 0) && r.integrable == r.image.is_zero(),
          "integrable, ||N||^2 = 0 and Im N = 0 disagree");
  require(sgn(r.norm_sq_N) >= 0, "||N||^2 < 0");
  const auto perp = r.image_perp.vectors();
  for (const auto& u : perp)
    for (const auto& v : perp) require(is_zero(n.apply(u, v)), "N does not vanish on (Im N)^perp");
  return r;
}

inline DistributionReport classify(const SymplecticTriple& t) { return classify(t, nijenhuis_tensor(t)); }

}  // namespace ak

#pragma once

#include <functional>
#include <vector>

#include "ak/nijenhuis.hpp"

namespace ak {

/// Linear conditions on T in Hom(V x V, V) singled out by the Nijenhuis tensor
/// of a compatible j: antisymmetry, T(jX,Y) = -j T(X,Y), and the cyclic sum of
/// Omega(T(X,Y),Z) vanishing. Unknown T^c_{ab} sits at column (a*d + b)*d + c.
class ConstraintSystem {
 public:
  using Row = SparseEchelon::Row;

  ConstraintSystem(Matrix omega, Matrix j) : omega_(std::move(omega)), j_(std::move(j)) {
    if (!omega_.square() || omega_.rows() != j_.rows() || !j_.square())
      throw Error(ErrorKind::DimensionMismatch, "Omega and j must be square of equal size");
  }

  std::size_t dim() const noexcept { return omega_.rows(); }
  std::size_t unknowns() const noexcept { return dim() * dim() * dim(); }
  std::size_t var(std::size_t a, std::size_t b, std::size_t c) const { return (a * dim() + b) * dim() + c; }

  /// Calls `emit` once per constraint row.
  void for_each_row(const std::function<void(Row&&)>& emit) const {
    const std::size_t d = dim();
    auto put = [](Row& r, std::size_t k, const Scalar& x) {
      if (sgn(x) == 0) return;
      auto& e = r[k];
      e += x;
      if (sgn(e) == 0) r.erase(k);
    };
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a; b < d; ++b)
        for (std::size_t c = 0; c < d; ++c) {
          Row r;
          put(r, var(a, b, c), 1);
          put(r, var(b, a, c), 1);
          emit(std::move(r));
        }
    // (T(j e_a, e_b) + j T(e_a, e_b))^c = sum_m j[m][a] T^c_{mb} + sum_m j[c][m] T^m_{ab}
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t c = 0; c < d; ++c) {
          Row r;
          for (std::size_t m = 0; m < d; ++m) {
            put(r, var(m, b, c), j_(m, a));
            put(r, var(a, b, m), j_(c, m));
          }
          emit(std::move(r));
        }
    // Omega(T(a,b), e) + Omega(T(b,e), a) + Omega(T(e,a), b)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a + 1; b < d; ++b)
        for (std::size_t e = b + 1; e < d; ++e) {
          Row r;
          for (std::size_t m = 0; m < d; ++m) {
            put(r, var(a, b, m), omega_(m, e));
            put(r, var(b, e, m), omega_(m, a));
            put(r, var(e, a, m), omega_(m, b));
          }
          emit(std::move(r));
        }
  }

  std::size_t rank() const {
    SparseEchelon ech;
    for_each_row([&](Row&& r) { ech.insert(std::move(r)); });
    return ech.rank();
  }

  std::size_t nullity() const { return unknowns() - rank(); }

  /// True when the tensor satisfies every constraint row.
  bool satisfied_by(const Tensor3& t) const {
    if (t.dim() != dim()) throw Error(ErrorKind::DimensionMismatch, "tensor dimension differs from the system");
    bool ok = true;
    for_each_row([&](Row&& r) {
      if (!ok) return;
      Scalar s = 0;
      for (const auto& [k, x] : r) {
        const std::size_t c = k % dim(), ab = k / dim();
        s += x * t.at(ab / dim(), ab % dim())[c];
      }
      if (sgn(s) != 0) ok = false;
    });
    return ok;
  }

 private:
  Matrix omega_;
  Matrix j_;
};

inline ConstraintSystem standard_constraint_system(std::size_t n) {
  return ConstraintSystem(standard_omega(n), standard_j(n));
}

/// Real dimension of the space of Nijenhuis-type tensors on (R^2n, Omega, j).
inline std::size_t nijenhuis_space_dim(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::NonpositiveParameter, "n must be at least 1");
  return standard_constraint_system(n).nullity();
}

/// 2n(n^2 - 1)/3
inline std::size_t nijenhuis_space_formula(std::size_t n) { return 2 * n * (n * n - 1) / 3; }

/// Membership of a triple's Nijenhuis tensor in the constraint space for its own (Omega, j).
inline bool in_nijenhuis_space(const SymplecticTriple& t, const Tensor3& n) {
  return ConstraintSystem(t.omega(), t.j()).satisfied_by(n);
}

}  // namespace ak

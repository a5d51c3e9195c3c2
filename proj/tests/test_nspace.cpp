#include <gtest/gtest.h>

#include <random>

#include "ak/ak.hpp"
#include "support/random_triples.hpp"

using namespace ak;

namespace {

Tensor3 random_tensor(std::mt19937& rng, std::size_t d) {
  return Tensor3::from_basis(d, [&](std::size_t, std::size_t) {
    Vector v(d);
    for (auto& x : v) x = aktest::small_rational(rng);
    return v;
  });
}

// Flattened coefficients in the same order as the constraint unknowns.
Vector flatten(const Tensor3& t) {
  Vector out;
  for (const auto& v : t.values()) out.insert(out.end(), v.begin(), v.end());
  return out;
}

// Dimension of the span of N_mu over all skew brackets mu (Jacobi not
// required) for which the standard Omega is a cocycle. The map mu -> N_mu is
// linear, so the span is spanned by the images of a kernel basis.
std::size_t cocycle_nijenhuis_span(std::size_t n) {
  const std::size_t d = 2 * n;
  const Matrix omega = standard_omega(n), j = standard_j(n);
  std::vector<std::array<std::size_t, 3>> slots;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) slots.push_back({a, b, c});
  auto table_of = [&](const Vector& mu) {
    std::vector<Vector> table(d * d, zero_vector(d));
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const auto [a, b, c] = slots[s];
      table[a * d + b][c] += mu[s];
      table[b * d + a][c] -= mu[s];
    }
    return table;
  };
  // Omega([a,b],e) + Omega([b,e],a) + Omega([e,a],b) = 0
  std::vector<Vector> rows;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (std::size_t e = b + 1; e < d; ++e) {
        Vector r = zero_vector(slots.size());
        for (std::size_t s = 0; s < slots.size(); ++s) {
          Vector mu = zero_vector(slots.size());
          mu[s] = 1;
          const auto t = table_of(mu);
          r[s] = dot(t[a * d + b], omega.col(e)) + dot(t[b * d + e], omega.col(a)) + dot(t[e * d + a], omega.col(b));
        }
        rows.push_back(std::move(r));
      }
  const Subspace closed =
      rows.empty() ? Subspace::full(slots.size()) : kernel(Matrix::from_rows(rows, slots.size()));
  std::vector<Vector> images;
  for (const auto& mu : closed.vectors()) {
    const auto table = table_of(mu);
    auto br = [&](const Vector& u, const Vector& v) {
      Vector r = zero_vector(d);
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) axpy(r, u[a] * v[b], table[a * d + b]);
      return r;
    };
    const Tensor3 nt = Tensor3::from_basis(d, [&](std::size_t a, std::size_t b) {
      const Vector x = unit_vector(d, a), y = unit_vector(d, b), jx = j * x, jy = j * y;
      return sub(sub(br(jx, jy), j * br(jx, y)), add(j * br(x, jy), br(x, y)));
    });
    EXPECT_TRUE(standard_constraint_system(n).satisfied_by(nt));
    images.push_back(flatten(nt));
  }
  return Subspace::span(d * d * d, images).dim();
}

}  // namespace

TEST(NSpace, DimensionsMatchFormula) {
  const std::size_t expected[] = {0, 4, 16, 40, 80};
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_EQ(nijenhuis_space_formula(n), expected[n - 1]);
    EXPECT_EQ(nijenhuis_space_dim(n), expected[n - 1]) << "n = " << n;
  }
}

TEST(NSpace, SparseRankAgreesWithDense) {
  for (std::size_t n = 1; n <= 2; ++n) {
    const auto sys = standard_constraint_system(n);
    std::vector<Vector> rows;
    sys.for_each_row([&](ConstraintSystem::Row&& r) {
      Vector v = zero_vector(sys.unknowns());
      for (const auto& [k, x] : r) v[k] = x;
      rows.push_back(std::move(v));
    });
    EXPECT_EQ(rank(Matrix::from_rows(rows, sys.unknowns())), sys.rank());
  }
}

TEST(NSpace, NijenhuisTensorsOfCocycleBracketsFillTheSpace) {
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_EQ(cocycle_nijenhuis_span(n), nijenhuis_space_dim(n)) << "n = " << n;
}

TEST(NSpace, CatalogTensorsAreMembers) {
  for (const auto& e : catalog()) EXPECT_TRUE(in_nijenhuis_space(e.triple, nijenhuis_tensor(e.triple))) << e.name;
}

TEST(NSpace, GenericTensorsAreNot) {
  std::mt19937 rng(7);
  const auto sys = standard_constraint_system(2);
  for (int i = 0; i < 10; ++i) EXPECT_FALSE(sys.satisfied_by(random_tensor(rng, 4)));
  EXPECT_TRUE(sys.satisfied_by(Tensor3(4)));
  EXPECT_THROW(sys.satisfied_by(Tensor3(6)), Error);
}

TEST(NSpace, NonpositiveN) {
  EXPECT_THROW(nijenhuis_space_dim(0), Error);
}

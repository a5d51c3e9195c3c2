#include <gtest/gtest.h>

#include "ak/ak.hpp"

using namespace ak;

namespace {

LieAlgebra sl2() {
  return LieAlgebra::from_named({"H", "E", "F"},
                                {{"H", "E", {{"E", 2}}}, {"H", "F", {{"F", -2}}}, {"E", "F", {{"H", 1}}}});
}

const std::vector<NamedBracket> ex1_brackets = {{"X1", "X2", {{"Y2", 1}}}, {"X1", "Y2", {{"Y1", 1}}}};

}  // namespace

TEST(Lie, AbelianAndCatalogValidate) {
  EXPECT_TRUE(LieAlgebra::validate(4, standard_names(2), {}).is_abelian());
  const auto g = LieAlgebra::from_named(standard_names(2), ex1_brackets);
  EXPECT_EQ(g.structure(1, 0), (Vector{0, 0, 0, -1}));  // [X2,X1] = -Y2
  EXPECT_EQ(g.bracket(Vector{1, 0, 0, 0}, Vector{0, 0, 0, 1}), (Vector{0, 0, 1, 0}));
}

TEST(Lie, JacobiViolationNamesTripleAndResidual) {
  auto bad = ex1_brackets;
  bad.push_back({"X2", "Y2", {{"X2", 1}}});
  try {
    LieAlgebra::from_named(standard_names(2), bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::JacobiViolation);
    EXPECT_EQ(e.indices(), (std::vector<std::size_t>{0, 1, 3}));
    EXPECT_NE(std::string(e.what()).find("(X1, X2, Y2)"), std::string::npos) << e.what();
  }
  // hand evaluation on (X1,X2,Y2): [X1,[X2,Y2]] + [X2,[Y2,X1]] + [Y2,[X1,X2]] = [X1,X2] + [X2,-Y1] + 0 = Y2
  const auto ok = LieAlgebra::from_named(standard_names(2), ex1_brackets);
  EXPECT_TRUE(is_zero(ok.jacobi_residual(0, 1, 3)));
}

TEST(Lie, BogusBracketX1IsStillJacobi) {
  // [X2,Y2] = X1 on top of Ex 1 happens to satisfy Jacobi; kept as a regression on the checker
  auto b = ex1_brackets;
  b.push_back({"X2", "Y2", {{"X1", 1}}});
  const auto g = LieAlgebra::from_named(standard_names(2), b);
  EXPECT_FALSE(g.jacobi_violation().has_value());
}

TEST(Lie, ValidateRejectsMalformedInput) {
  EXPECT_THROW(LieAlgebra::validate(3, standard_names(2), {}), Error);
  try {
    LieAlgebra::validate(2, {"a", "b"}, {{0, 5, {0, 0}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
  try {
    LieAlgebra::validate(2, {"a", "b"}, {{1, 0, {1, 0}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
  }
  std::vector<Vector> table(4, zero_vector(2));
  table[1] = {1, 0};
  table[2] = {1, 0};  // [b,a] should be -[a,b]
  try {
    LieAlgebra::from_structure_constants({"a", "b"}, table);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSkew);
  }
}

TEST(Lie, DerivedSubalgebra) {
  EXPECT_TRUE(derived_subalgebra(builtin("abelian(2)").triple.algebra()).is_zero());
  EXPECT_EQ(derived_subalgebra(builtin("ex1").triple.algebra()), Subspace::span(4, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
  const auto g6 = builtin("dim6").triple.algebra();
  const Subspace d6 = derived_subalgebra(g6);
  EXPECT_EQ(d6.dim(), 4u);
  EXPECT_TRUE(is_bracket_closed(g6, d6));
  EXPECT_EQ(derived_subalgebra(sl2()).dim(), 3u);
}

TEST(Lie, Nilpotency) {
  const auto ab = is_nilpotent(builtin("abelian(2)").triple.algebra());
  EXPECT_TRUE(ab.nilpotent);
  EXPECT_EQ(ab.lower_central_dims, (std::vector<std::size_t>{0}));
  EXPECT_TRUE(is_nilpotent(builtin("ex1").triple.algebra()).nilpotent);
  EXPECT_TRUE(is_nilpotent(builtin("ex2").triple.algebra()).nilpotent);
  EXPECT_FALSE(is_nilpotent(builtin("ex3").triple.algebra()).nilpotent);
  EXPECT_FALSE(is_nilpotent(builtin("ex4").triple.algebra()).nilpotent);
  EXPECT_TRUE(is_nilpotent(builtin("dim6").triple.algebra()).nilpotent);
  EXPECT_FALSE(is_nilpotent(sl2()).nilpotent);
  // ex1: [g,g] = <Y1,Y2>, [g,[g,g]] = <Y1>, then 0
  EXPECT_EQ(is_nilpotent(builtin("ex1").triple.algebra()).lower_central_dims, (std::vector<std::size_t>{2, 1, 0}));
}

TEST(Lie, Characters) {
  EXPECT_EQ(characters(builtin("abelian(2)").triple.algebra()).dim(), 4u);
  const Subspace c2 = characters(builtin("ex2").triple.algebra());
  EXPECT_EQ(c2.dim(), 3u);
  EXPECT_FALSE(c2.contains(Vector{0, 1, 0, 0}));
  EXPECT_TRUE(characters(sl2()).is_zero());
}

TEST(Lie, LatticeCriterion) {
  const auto c1 = lattice_criterion(builtin("ex1").triple.algebra());
  EXPECT_TRUE(c1.applicable && c1.lattice_exists);
  const auto c3 = lattice_criterion(builtin("ex3").triple.algebra());
  EXPECT_TRUE(c3.rational_basis);
  EXPECT_FALSE(c3.applicable);
  EXPECT_FALSE(c3.lattice_exists);
  EXPECT_TRUE(lattice_criterion(builtin("dim6").triple.algebra()).lattice_exists);
}

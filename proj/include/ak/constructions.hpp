#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ak/nijenhuis.hpp"

namespace ak {

/// Claimed answers attached to a catalog entry. Unset fields make no claim.
struct Expected {
  std::optional<std::vector<Vector>> image;  // spanning vectors
  std::optional<std::vector<Vector>> image_perp;
  std::optional<bool> image_involutive;
  std::optional<bool> perp_involutive;
  std::optional<bool> maximally_non_integrable;
  std::optional<bool> integrable;
  std::optional<Scalar> norm_sq;
  std::optional<bool> nilpotent;
};

struct CatalogEntry {
  std::string name;
  SymplecticTriple triple;
  Expected expected;
};

namespace detail {

inline Vector vec(std::initializer_list<Scalar> xs) { return Vector(xs); }

inline CatalogEntry dim4_example(const std::string& name, std::vector<Bracket> brackets, Expected e) {
  auto g = LieAlgebra::validate(4, standard_names(2), brackets);
  return {name, standard_triple(g), std::move(e)};
}

/// Splits "name(arg)" into name and arg; arg is empty when there are no parentheses.
inline std::pair<std::string, std::string> split_call(const std::string& s) {
  const auto open = s.find('(');
  if (open == std::string::npos) return {s, ""};
  if (s.back() != ')') throw Error(ErrorKind::UnknownName, "malformed catalog name '" + s + "'");
  return {s.substr(0, open), s.substr(open + 1, s.size() - open - 2)};
}

}  // namespace detail

inline CatalogEntry abelian_entry(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::NonpositiveParameter, "abelian(n) needs n >= 1");
  auto g = LieAlgebra::validate(2 * n, standard_names(n), {});
  Expected e;
  e.image = std::vector<Vector>{};
  e.integrable = true;
  e.norm_sq = 0;
  e.nilpotent = true;
  return {"abelian(" + std::to_string(n) + ")", standard_triple(g), e};
}

inline CatalogEntry ex1_entry() {
  using detail::vec;
  Expected e;
  e.image = std::vector<Vector>{vec({1, 0, 0, -1}), vec({0, 1, 1, 0})};
  e.image_perp = std::vector<Vector>{vec({0, 1, -1, 0}), vec({1, 0, 0, 1})};
  e.image_involutive = false;
  e.perp_involutive = false;
  e.nilpotent = true;
  return detail::dim4_example("ex1", {{0, 1, vec({0, 0, 0, 1})}, {0, 3, vec({0, 0, 1, 0})}}, e);
}

inline CatalogEntry ex2_entry() {
  using detail::vec;
  Expected e;
  e.image = std::vector<Vector>{vec({0, 1, 0, 0}), vec({0, 0, 0, 1})};
  e.image_perp = std::vector<Vector>{vec({1, 0, 0, 0}), vec({0, 0, 1, 0})};
  e.image_involutive = true;
  e.perp_involutive = true;
  e.nilpotent = true;
  return detail::dim4_example("ex2", {{2, 3, vec({0, 1, 0, 0})}}, e);
}

inline CatalogEntry ex3_entry() {
  using detail::vec;
  const Scalar h(1, 2);
  Expected e;
  e.image = std::vector<Vector>{vec({0, 0, 0, 1}), vec({0, 1, 0, 0})};
  e.image_perp = std::vector<Vector>{vec({0, 0, 1, 0}), vec({1, 0, 0, 0})};
  e.image_involutive = false;
  e.perp_involutive = true;
  return detail::dim4_example("ex3",
                              {{0, 1, vec({0, h, 0, h})},
                               {0, 2, vec({0, 0, 1, 0})},
                               {0, 3, vec({0, 0, 0, h})},
                               {1, 3, vec({0, 0, 1, 0})}},
                              e);
}

inline CatalogEntry ex4_entry() {
  using detail::vec;
  Expected e;
  e.image = std::vector<Vector>{vec({1, 2, 0, 0}), vec({0, 0, 1, 2})};
  e.image_perp = std::vector<Vector>{vec({2, -1, 0, 0}), vec({0, 0, 2, -1})};
  e.image_involutive = true;
  e.perp_involutive = false;
  return detail::dim4_example("ex4",
                              {{0, 1, vec({0, -1, 2, 4})}, {0, 2, vec({0, 0, -1, 0})}, {0, 3, vec({0, 0, 1, 1})}}, e);
}

/// Basis X1 X2 X3 Y1 Y2 Y3.
inline CatalogEntry dim6_entry() {
  using detail::vec;
  std::vector<Bracket> b = {
      {0, 1, vec({0, 1, 1, 0, 0, 0})},   // [X1,X2] = X2 + X3
      {0, 2, vec({0, -1, -1, 0, 1, 0})}, // [X1,X3] = -X2 - X3 + Y2
      {0, 4, vec({0, 0, 0, 0, -1, 1})},  // [X1,Y2] = -Y2 + Y3
      {0, 5, vec({0, 0, 0, 0, -1, 1})},  // [X1,Y3] = -Y2 + Y3
      {1, 2, vec({0, 0, 0, 1, 0, 0})},   // [X2,X3] = Y1
  };
  auto g = LieAlgebra::validate(6, standard_names(3), b);
  Expected e;
  e.image = Matrix::identity(6).row_list();
  e.maximally_non_integrable = true;
  e.nilpotent = true;
  return {"dim6", standard_triple(g), e};
}

/// Invariant frame E1..E4 with [E3,E4] = E2, Omega = e1^e3 + e2^e4,
/// j E1 = alpha E3, j E2 = E4.
inline CatalogEntry thurston_entry(const Scalar& alpha) {
  if (sgn(alpha) <= 0) throw Error(ErrorKind::NonpositiveParameter, "alpha must be positive, got " + to_string(alpha));
  auto g = LieAlgebra::validate(4, {"E1", "E2", "E3", "E4"}, {{2, 3, detail::vec({0, 1, 0, 0})}});
  Matrix omega(4, 4);
  omega(0, 2) = 1;
  omega(2, 0) = -1;
  omega(1, 3) = 1;
  omega(3, 1) = -1;
  Matrix j(4, 4);
  j(2, 0) = alpha;
  j(0, 2) = -1 / alpha;
  j(3, 1) = 1;
  j(1, 3) = -1;
  Expected e;
  e.norm_sq = 8 * alpha;
  e.nilpotent = true;
  return {"thurston(" + to_string(alpha) + ")", build_triple(g, omega, j), e};
}

inline std::vector<std::string> catalog_names() {
  return {"abelian(1)", "abelian(2)", "abelian(3)", "ex1", "ex2", "ex3", "ex4", "dim6",
          "thurston(1/2)", "thurston(1)", "thurston(2)", "thurston(3)"};
}

/// Catalog lookup: abelian(n), ex1..ex4, dim6, thurston(alpha). A bare
/// "thurston" takes `alpha` (default 1); a bare "abelian" means abelian(1).
inline CatalogEntry builtin(const std::string& name, std::optional<Scalar> alpha = std::nullopt) {
  const auto [base, arg] = detail::split_call(name);
  if (base == "ex1" && arg.empty()) return ex1_entry();
  if (base == "ex2" && arg.empty()) return ex2_entry();
  if (base == "ex3" && arg.empty()) return ex3_entry();
  if (base == "ex4" && arg.empty()) return ex4_entry();
  if (base == "dim6" && arg.empty()) return dim6_entry();
  if (base == "abelian") {
    if (arg.empty()) return abelian_entry(1);
    Scalar n;
    try {
      n = parse_scalar(arg);
    } catch (const Error&) {
      throw Error(ErrorKind::UnknownName, "bad abelian size '" + arg + "'");
    }
    if (n.get_den() != 1 || sgn(n) <= 0) throw Error(ErrorKind::NonpositiveParameter, "abelian(n) needs n >= 1");
    return abelian_entry(n.get_num().get_ui());
  }
  if (base == "thurston") {
    if (!arg.empty()) {
      Scalar a;
      try {
        a = parse_scalar(arg);
      } catch (const Error&) {
        throw Error(ErrorKind::UnknownName, "bad thurston parameter '" + arg + "'");
      }
      if (alpha && *alpha != a) throw Error(ErrorKind::UnknownName, "conflicting thurston parameters");
      return thurston_entry(a);
    }
    return thurston_entry(alpha.value_or(Scalar(1)));
  }
  throw Error(ErrorKind::UnknownName, "no catalog entry named '" + name + "'");
}

inline std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& n : catalog_names()) out.push_back(builtin(n));
  return out;
}

namespace detail {

/// Appends two basis vectors c<m>, d<m> (m = new complex dimension) with
/// Omega(c,d) = 1 and j c = d; `extra` receives the brackets involving them.
inline SymplecticTriple append_pair(const SymplecticTriple& t, std::vector<Bracket> extra) {
  const std::size_t d = t.dim();
  const std::string m = std::to_string(d / 2 + 1);
  auto names = t.algebra().basis_names();
  names.push_back("c" + m);
  names.push_back("d" + m);
  std::vector<Bracket> brackets;
  for (auto b : t.algebra().nonzero_brackets()) {
    b.coeffs.resize(d + 2, Scalar(0));
    brackets.push_back(std::move(b));
  }
  for (auto& b : extra) brackets.push_back(std::move(b));
  auto g = LieAlgebra::validate(d + 2, std::move(names), brackets);
  return build_triple(std::move(g), direct_sum(t.omega(), standard_omega(1)), direct_sum(t.j(), standard_j(1)));
}

}  // namespace detail

/// Direct product with the flat 2-dimensional Kahler algebra.
inline SymplecticTriple product_extension(const SymplecticTriple& t) { return detail::append_pair(t, {}); }

/// Throws unless xi is a nonzero character of g (a linear form killing [g,g]).
inline void require_character(const LieAlgebra& g, const Vector& xi) {
  if (xi.size() != g.dim())
    throw Error(ErrorKind::DimensionMismatch, "character has " + std::to_string(xi.size()) + " entries, expected " +
                                                  std::to_string(g.dim()));
  if (is_zero(xi)) throw Error(ErrorKind::ZeroCharacter, "xi = 0");
  const Subspace chars = characters(g);
  if (chars.is_zero()) throw Error(ErrorKind::PerfectAlgebra, "the algebra has no nonzero character");
  if (!chars.contains(xi)) throw Error(ErrorKind::NotACharacter, "xi does not vanish on [g,g]");
}

/// g' = g + Rc + Rd with [u,c] = -xi(u) d; xi must be a nonzero character.
inline SymplecticTriple character_extension(const SymplecticTriple& t, const Vector& xi) {
  require_character(t.algebra(), xi);
  const std::size_t d = t.dim();
  std::vector<Bracket> extra;
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(xi[i]) == 0) continue;
    Vector v = zero_vector(d + 2);
    v[d + 1] = -xi[i];
    extra.push_back({i, d, std::move(v)});
  }
  return detail::append_pair(t, std::move(extra));
}

/// Character used when raising the rank: first basis vector of the character space.
inline Vector default_character(const SymplecticTriple& t) {
  const Subspace chars = characters(t.algebra());
  if (chars.is_zero()) throw Error(ErrorKind::PerfectAlgebra, "the algebra has no nonzero character");
  return chars.basis().row(0);
}

/// A 2n-dimensional triple whose Nijenhuis image has dimension 2k, with the
/// requested involutivity of Im N and of its orthogonal complement.
///
/// Seeds: ex1 (neither involutive), ex2 (both), ex3 (only the complement),
/// ex4 (only the image); abelian(n) for k = 0; dim6 for k = n >= 3. The rank is
/// raised by character extensions, the dimension by product extensions.
inline SymplecticTriple build_rank_example(std::size_t n, std::size_t k, std::optional<bool> inv_image = std::nullopt,
                                           std::optional<bool> inv_perp = std::nullopt) {
  if (n < 2 || k > n)
    throw Error(ErrorKind::Unsatisfiable, "need n >= 2 and 0 <= k <= n, got n=" + std::to_string(n) +
                                              " k=" + std::to_string(k));
  if (n == 2 && k == 2) throw Error(ErrorKind::Unsatisfiable, "Im N has dimension at most 2 in dimension 4");
  const bool trivial = k == 0 || k == n;
  if (trivial && (inv_image == false || inv_perp == false))
    throw Error(ErrorKind::Unsatisfiable, "for k = 0 or k = n both distributions are trivially involutive");

  SymplecticTriple t;
  if (k == 0) {
    t = abelian_entry(n).triple;
  } else if (k == n) {
    t = dim6_entry().triple;
    for (std::size_t m = 3; m < n; ++m) t = character_extension(t, default_character(t));
  } else {
    const bool ii = inv_image.value_or(true), ip = inv_perp.value_or(true);
    t = ii ? (ip ? ex2_entry() : ex4_entry()).triple : (ip ? ex3_entry() : ex1_entry()).triple;
    for (std::size_t m = 1; m < k; ++m) t = character_extension(t, default_character(t));
    for (std::size_t m = k + 1; m < n; ++m) t = product_extension(t);
  }

  const auto r = classify(t);
  const bool ok = t.dim() == 2 * n && r.image.dim() == 2 * k && (!inv_image || r.image_involutive == *inv_image) &&
                  (!inv_perp || r.perp_involutive == *inv_perp);
  if (!ok) throw Error(ErrorKind::InternalInvariantViolation, "synthesized triple misses the requested pattern");
  return t;
}

}  // namespace ak

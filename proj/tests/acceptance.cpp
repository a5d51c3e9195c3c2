// One PASS/FAIL line per acceptance criterion. Every check is exact.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "ak/ak.hpp"
#include "support/random_triples.hpp"

using namespace ak;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<bool(std::string&)> check;  // fills a short detail string
};

std::vector<SymplecticTriple> random_dim4(std::size_t count) {
  std::mt19937 rng(4242);
  std::vector<SymplecticTriple> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(aktest::random_triple(rng, 4));
  return out;
}

std::vector<SymplecticTriple> random_dim6(std::size_t count) {
  std::mt19937 rng(6161);
  std::vector<SymplecticTriple> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(aktest::random_triple(rng, 6));
  return out;
}

bool table_goldens(std::string& detail) {
  const std::vector<std::string> claims{"Im N", "Im N involutive", "(Im N)^perp", "(Im N)^perp involutive"};
  std::size_t spans = 0, flags = 0, failed = 0;
  for (const char* name : {"ex1", "ex2", "ex3", "ex4"})
    for (const auto& r : entry_goldens(builtin(name))) {
      if (std::find(claims.begin(), claims.end(), r.claim) == claims.end()) continue;
      (r.claim.find("involutive") == std::string::npos ? spans : flags) += 1;
      if (!r.pass) {
        ++failed;
        detail += r.subject + " " + r.claim + ": got " + r.actual + ", expected " + r.expected + "; ";
      }
    }
  detail += std::to_string(spans) + " span claims, " + std::to_string(flags) + " flags";
  return failed == 0 && spans == 8 && flags == 8;
}

bool dim6(std::string& detail) {
  const auto t = builtin("dim6").triple;
  const auto r = classify(t);
  detail = "dim Im N = " + std::to_string(r.image.dim()) + " of " + std::to_string(t.dim());
  return r.image.is_full() && r.maximally_non_integrable;
}

bool thurston(std::string& detail) {
  bool ok = true;
  for (const Scalar& a : {Scalar(1, 2), Scalar(1), Scalar(2), Scalar(3)}) {
    const auto t = thurston_entry(a).triple;
    const Scalar n2 = classify(t).norm_sq_N;
    detail += "a=" + to_string(a) + ": " + to_string(n2) + " ";
    ok = ok && n2 == 8 * a;
  }
  return ok;
}

bool dim4_bound(std::string& detail) {
  std::vector<SymplecticTriple> dim4;
  for (const char* name : {"ex1", "ex2", "ex3", "ex4"}) dim4.push_back(builtin(name).triple);
  const std::size_t randoms = 120;
  for (auto& t : random_dim4(randoms)) dim4.push_back(std::move(t));
  bool ok = true;
  std::size_t twos = 0;
  for (const auto& t : dim4) {
    const auto r = classify(t);
    ok = ok && (r.image.dim() == 0 || r.image.dim() == 2);
    twos += r.image.dim() == 2;
  }
  // the equivalence on everything validated in the suite
  std::vector<SymplecticTriple> all = dim4;
  for (const auto& e : catalog()) all.push_back(e.triple);
  for (auto& t : random_dim6(30)) all.push_back(std::move(t));
  for (const auto& t : all) {
    const auto r = classify(t);
    ok = ok && ((r.image.dim() == 2) == (r.kernel.dim() + 4 == t.dim()));
  }
  detail = std::to_string(dim4.size()) + " dim-4 triples (" + std::to_string(twos) + " with dim Im = 2), " +
           std::to_string(all.size()) + " checked for the equivalence";
  return ok;
}

std::vector<SymplecticTriple> catalog_and_random() {
  std::vector<SymplecticTriple> all;
  for (const auto& e : catalog()) all.push_back(e.triple);
  for (auto& t : random_dim4(100)) all.push_back(std::move(t));
  for (auto& t : random_dim6(20)) all.push_back(std::move(t));
  return all;
}

bool tensor_identities(std::string& detail) {
  const auto all = catalog_and_random();
  std::size_t bad = 0;
  for (const auto& t : all) bad += !check_tensor_identities(nijenhuis_tensor(t), t).all();
  detail = std::to_string(all.size()) + " triples, " + std::to_string(bad) + " failing";
  return bad == 0;
}

bool connection_axioms(std::string& detail) {
  std::size_t bad = 0;
  const auto entries = catalog();
  for (const auto& e : entries) {
    const auto& t = e.triple;
    const Tensor3 n = nijenhuis_tensor(t);
    const Connection lc = levi_civita(t);
    const Connection sc = symplectic_connection(t, lc);
    const Connection ch = chern_connection(t, lc);
    const Tensor3 quarter = Tensor3::from_basis(t.dim(), [&](std::size_t a, std::size_t b) {
      return scaled(Scalar(1, 4), n.at(a, b));
    });
    const Tensor3 tor = torsion(ch, t.algebra());
    const bool ok = preserves_form(lc, t.metric()) && torsion(lc, t.algebra()).is_zero() &&
                    preserves_form(sc, t.omega()) && torsion(sc, t.algebra()).is_zero() &&
                    preserves_form(ch, t.omega()) && preserves_j(ch, t.j()) && tor == quarter &&
                    torsion_identity_holds(tor, n, t.j());
    if (!ok) {
      ++bad;
      detail += e.name + " ";
    }
  }
  detail += std::to_string(entries.size()) + " catalog triples, " + std::to_string(bad) + " failing";
  return bad == 0;
}

bool nabla_j_identities(std::string& detail) {
  std::size_t bad = 0;
  const auto entries = catalog();
  for (const auto& e : entries)
    if (!nabla_J_checks(e.triple).all()) {
      ++bad;
      detail += e.name + " ";
    }
  detail += std::to_string(entries.size()) + " catalog triples, " + std::to_string(bad) + " failing";
  return bad == 0;
}

bool scalar_identity(std::string& detail) {
  bool ok = true;
  for (const auto& e : catalog()) {
    const auto c = curvature_summary(e.triple);
    const Scalar n2 = classify(e.triple).norm_sq_N;
    const bool holds = c.hermitian_scalar == c.scalar + 2 * n2;
    if (!holds)
      detail += e.name + ": s^C - s^g = " + to_string(c.hermitian_scalar - c.scalar) + " vs 2|N|^2 = " +
                to_string(2 * n2) + "; ";
    ok = ok && holds;
  }
  if (ok) detail = "holds on the full catalog";
  return ok;
}

bool parallel_n(std::string& detail) {
  std::size_t bad = 0;
  const auto entries = catalog();
  for (const auto& e : entries) {
    const auto r = covariant_derivative_N(e.triple);
    if (r.nabla_N_zero != nijenhuis_tensor(e.triple).is_zero()) {
      ++bad;
      detail += e.name + " ";
    }
  }
  detail += std::to_string(entries.size()) + " catalog triples, " + std::to_string(bad) + " failing";
  return bad == 0;
}

Subspace pad(const Subspace& s, std::size_t dim) {
  std::vector<Vector> vs;
  for (auto v : s.vectors()) {
    v.resize(dim, Scalar(0));
    vs.push_back(std::move(v));
  }
  return Subspace::span(dim, vs);
}

bool constructions(std::string& detail) {
  bool ok = true;
  std::size_t nilpotent_checks = 0;
  for (const auto& e : catalog()) {
    const auto& t = e.triple;
    const std::size_t d = t.dim() + 2;
    const Subspace cd = Subspace::span(d, {unit_vector(d, d - 2), unit_vector(d, d - 1)});
    const auto base = classify(t);
    const auto p = product_extension(t);
    const auto rp = classify(p);
    ok = ok && rp.image == pad(base.image, d) && rp.image_perp.dim() == base.image_perp.dim() + 2;
    const auto c = character_extension(t, default_character(t));
    const auto rc = classify(c);
    ok = ok && rc.image == sum(pad(base.image, d), cd) && rc.image.dim() == base.image.dim() + 2 &&
         rc.image_perp == pad(base.image_perp, d);
    if (is_nilpotent(t.algebra()).nilpotent) {
      nilpotent_checks += 2;
      ok = ok && is_nilpotent(p.algebra()).nilpotent && is_nilpotent(c.algebra()).nilpotent;
    }
  }
  std::size_t built = 0;
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      if (n == 2 && k == 2) continue;
      std::vector<std::pair<std::optional<bool>, std::optional<bool>>> patterns;
      if (k == 0 || k == n)
        patterns.push_back({std::nullopt, std::nullopt});
      else
        for (bool a : {false, true})
          for (bool b : {false, true}) patterns.push_back({a, b});
      for (const auto& [ii, ip] : patterns) {
        const auto r = classify(build_rank_example(n, k, ii, ip));
        ++built;
        ok = ok && r.image.dim() == 2 * k && (!ii || r.image_involutive == *ii) && (!ip || r.perp_involutive == *ip);
      }
    }
  detail = std::to_string(built) + " rank examples, " + std::to_string(nilpotent_checks) + " nilpotency checks";
  return ok;
}

bool nspace(std::string& detail) {
  const std::size_t expected[] = {0, 4, 16, 40, 80};
  bool ok = true;
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::size_t got = nijenhuis_space_dim(n);
    detail += std::to_string(got) + (n < 5 ? ", " : "");
    ok = ok && got == expected[n - 1] && got == nijenhuis_space_formula(n);
  }
  return ok;
}

bool twistor(std::string& detail) {
  bool ok = true;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto m = build_twistor_model(n);
    ok = ok && twistor_nijenhuis(m, +1).integrable;
    if (n < 2) continue;
    const auto minus = twistor_nijenhuis(m, -1);
    ok = ok && minus.image == m.qp && minus.image.dim() == n * n + n && minus.image_pp == m.q;
    const auto pos = positivity_report(m);
    ok = ok && pos.minus.compatible && pos.plus.compatible && pos.minus.positive && !pos.plus.positive &&
         pos.plus.witness && sgn(pos.plus.witness_value) <= 0;
    if (n == 2) detail = "J+ witness " + named_combination(*pos.plus.witness, m.ambient.basis_names()) +
                         " with kks(X, J+X) = " + to_string(pos.plus.witness_value);
  }
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "golden table spans and involutivity", table_goldens},
      {2, "dim-6 example maximally non-integrable", dim6},
      {3, "Thurston |N|^2 = 8 alpha", thurston},
      {4, "dim-4 image bound and image/kernel equivalence", dim4_bound},
      {5, "tensor identities", tensor_identities},
      {6, "connection axioms", connection_axioms},
      {7, "nabla J identities", nabla_j_identities},
      {8, "s^C = s^g + 2|N|^2", scalar_identity},
      {9, "nabla N zero iff N zero", parallel_n},
      {10, "constructions", constructions},
      {11, "N-space dimension 2n(n^2-1)/3", nspace},
      {12, "twistor model", twistor},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool pass = false;
    try {
      pass = c.check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    failed += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << " " << c.id << " " << c.title << " (" << detail << ")\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}

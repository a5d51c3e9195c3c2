#pragma once

#include <sstream>
#include <string>

#include "ak/connections.hpp"
#include "ak/io.hpp"

namespace ak {

struct ConnectionAxioms {
  bool levi_civita = false;  // nabla g = 0, T = 0
  bool symplectic = false;   // nabla Omega = 0, T = 0
  bool chern = false;        // nabla Omega = 0, nabla J = 0, T = N/4, torsion identity
};

/// Everything the CLI reports about one triple.
struct AnalysisReport {
  std::string name;
  std::string hash;
  SymplecticTriple triple;
  Tensor3 n;
  TensorIdentities identities;
  DistributionReport distributions;
  Connection levi_civita, symplectic, chern;
  ConnectionAxioms axioms;
  NablaJChecks nabla_j;
  CurvatureSummary curvature;
  bool real_complex_trace_relation = false;
  NablaNReport nabla_n;
  NilpotencyReport nilpotency;
  LatticeCriterion lattice;

  bool kahler() const { return distributions.integrable; }
  bool chern_ricci_proportional_to_omega() const { return curvature.chern_ricci_factor.has_value(); }
  Scalar scalar_difference() const { return curvature.hermitian_scalar - curvature.scalar; }
};

inline AnalysisReport analyze(const SymplecticTriple& t, const std::string& name) {
  AnalysisReport r;
  r.name = name;
  r.hash = triple_hash(t);
  r.triple = t;
  r.n = nijenhuis_tensor(t);
  r.identities = check_tensor_identities(r.n, t);
  r.distributions = classify(t, r.n);
  r.levi_civita = levi_civita(t);
  r.symplectic = symplectic_connection(t, r.levi_civita);
  r.chern = chern_connection(t, r.levi_civita);
  const auto& g = t.algebra();
  r.axioms.levi_civita = preserves_form(r.levi_civita, t.metric()) && torsion(r.levi_civita, g).is_zero();
  r.axioms.symplectic = preserves_form(r.symplectic, t.omega()) && torsion(r.symplectic, g).is_zero();
  const Tensor3 tc = torsion(r.chern, g);
  r.axioms.chern = preserves_form(r.chern, t.omega()) && preserves_j(r.chern, t.j()) &&
                   tc == Tensor3::from_basis(t.dim(), [&](std::size_t a, std::size_t b) {
                     return scaled(Scalar(1, 4), r.n.at(a, b));
                   }) &&
                   torsion_identity_holds(tc, r.n, t.j());
  r.nabla_j = nabla_J_checks(t, r.levi_civita);
  r.curvature = curvature_summary(t, r.levi_civita);

  // Tr_R(J R^C) = -2 Im Tr_C(R^C) with Re Tr_C(R^C) = 0, on every basis pair.
  const auto chern_r = curvature(r.chern, g);
  const std::size_t d = t.dim();
  r.real_complex_trace_relation = true;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const auto [re, im] = complex_trace(chern_r[a * d + b], t.j());
      if (sgn(re) != 0 || r.curvature.chern_ricci(a, b) != -2 * im) r.real_complex_trace_relation = false;
    }
  r.nabla_n = covariant_derivative_N(t, r.levi_civita);
  r.nilpotency = is_nilpotent(g);
  r.lattice = lattice_criterion(g);
  return r;
}

namespace detail {

inline Json tensor3_json(const Tensor3& t) {
  Json a = Json::array();
  for (std::size_t i = 0; i < t.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < t.dim(); ++j) row.push_back(vector_json(t.at(i, j)));
    a.push_back(row);
  }
  return a;
}

inline Json connection_json(const Connection& c) {
  Json a = Json::array();
  for (const auto& m : c.gamma) a.push_back(matrix_json(m.transpose()));  // a[i][j] = nabla_{e_i} e_j
  return a;
}

}  // namespace detail

/// Deterministic JSON: fixed key order, exact rationals, no timings.
inline Json report_json(const AnalysisReport& r, bool full) {
  const auto& names = r.triple.algebra().basis_names();
  const auto& dr = r.distributions;
  Json j;
  j["name"] = r.name;
  j["hash"] = r.hash;
  j["dim"] = r.triple.dim();
  j["basis"] = names;
  j["validation"] = "ok";

  Json image = subspace_json(dr.image, names);
  image["involutive"] = dr.image_involutive;
  Json perp = subspace_json(dr.image_perp, names);
  perp["involutive"] = dr.perp_involutive;
  Json nij;
  nij["norm_sq_N"] = to_string(dr.norm_sq_N);
  nij["image"] = image;
  nij["image_perp"] = perp;
  nij["kernel"] = subspace_json(dr.kernel, names);
  nij["identities"] = {{"antisymmetric", r.identities.antisymmetric},
                       {"j_antilinear", r.identities.j_antilinear},
                       {"cyclic", r.identities.cyclic}};
  j["nijenhuis"] = nij;

  j["connections"] = {{"levi_civita", r.axioms.levi_civita},
                      {"symplectic", r.axioms.symplectic},
                      {"chern", r.axioms.chern},
                      {"nabla_J_omega_N_relation", r.nabla_j.n_relation},
                      {"nabla_JX_J_antilinear", r.nabla_j.j_antilinearity}};

  const auto& c = r.curvature;
  Json curv;
  curv["scalar_g"] = to_string(c.scalar);
  curv["hermitian_scalar"] = to_string(c.hermitian_scalar);
  curv["hermitian_minus_riemannian"] = to_string(r.scalar_difference());
  curv["two_norm_sq_N"] = to_string(2 * dr.norm_sq_N);
  curv["scalar_identity_holds"] = r.scalar_difference() == 2 * dr.norm_sq_N;
  curv["ricci"] = matrix_json(c.ricci);
  curv["chern_ricci"] = matrix_json(c.chern_ricci);
  curv["chern_ricci_factor"] = c.chern_ricci_factor ? Json(to_string(*c.chern_ricci_factor)) : Json(nullptr);
  curv["real_complex_trace_relation"] = r.real_complex_trace_relation;
  curv["functionals"] = {{"norm_sq_N", to_string(dr.norm_sq_N)}, {"scalar_g", to_string(c.scalar)}};
  j["curvature"] = curv;

  j["nabla_N"] = {{"zero", r.nabla_n.nabla_N_zero},
                  {"image_parallel", r.nabla_n.image_parallel},
                  {"image_perp_parallel", r.nabla_n.image_perp_parallel},
                  {"label", r.nabla_n.label}};

  j["predicates"] = {{"kahler", r.kahler()},
                     {"maximally_non_integrable", dr.maximally_non_integrable},
                     {"ricci_j_invariant", c.ricci_j_invariant},
                     {"chern_ricci_proportional_to_omega", r.chern_ricci_proportional_to_omega()},
                     {"nilpotent", r.nilpotency.nilpotent},
                     {"lattice_criterion",
                      {{"applicable", r.lattice.applicable},
                       {"rational_basis", r.lattice.rational_basis},
                       {"lattice_exists", r.lattice.lattice_exists}}}};
  j["lower_central_dims"] = r.nilpotency.lower_central_dims;

  if (full) {
    Json raw;
    raw["N"] = detail::tensor3_json(r.n);
    raw["levi_civita"] = detail::connection_json(r.levi_civita);
    raw["symplectic"] = detail::connection_json(r.symplectic);
    raw["chern"] = detail::connection_json(r.chern);
    Json riem = Json::array();
    for (const auto& m : c.riemann) riem.push_back(matrix_json(m));
    raw["riemann"] = riem;  // riemann[i*dim + j][l][k] = (R(e_i,e_j) e_k)^l
    j["tensors"] = raw;
  }
  return j;
}

/// Human-readable summary of the same report.
inline std::string report_text(const AnalysisReport& r, bool full) {
  const auto& names = r.triple.algebra().basis_names();
  const auto& dr = r.distributions;
  std::ostringstream o;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  auto span = [&](const Subspace& s) {
    std::string out = "<";
    for (const auto& v : s.vectors()) out += (out.size() > 1 ? ", " : "") + named_combination(v, names);
    return out + ">";
  };
  o << r.name << " (dim " << r.triple.dim() << ", hash " << r.hash << ")\n";
  o << "  Im N          " << span(dr.image) << "  involutive: " << yn(dr.image_involutive) << "\n";
  o << "  (Im N)^perp   " << span(dr.image_perp) << "  involutive: " << yn(dr.perp_involutive) << "\n";
  o << "  Ker N         " << span(dr.kernel) << "\n";
  o << "  |N|^2         " << dr.norm_sq_N << "\n";
  o << "  kahler " << yn(r.kahler()) << ", maximally non integrable " << yn(dr.maximally_non_integrable) << "\n";
  o << "  s^g           " << r.curvature.scalar << "\n";
  o << "  s^C           " << r.curvature.hermitian_scalar << "\n";
  o << "  s^C - s^g     " << r.scalar_difference() << "  (2|N|^2 = " << Scalar(2 * dr.norm_sq_N) << ")\n";
  o << "  Ric J-invariant " << yn(r.curvature.ricci_j_invariant) << ", ChRic ~ Omega "
    << yn(r.chern_ricci_proportional_to_omega()) << "\n";
  o << "  connections   LC " << yn(r.axioms.levi_civita) << ", symplectic " << yn(r.axioms.symplectic) << ", Chern "
    << yn(r.axioms.chern) << "; nabla J identities " << yn(r.nabla_j.all()) << "\n";
  o << "  nabla N = 0 " << yn(r.nabla_n.nabla_N_zero) << ", Im N parallel " << yn(r.nabla_n.image_parallel);
  if (!r.nabla_n.label.empty()) o << " [" << r.nabla_n.label << "]";
  o << "\n";
  o << "  nilpotent " << yn(r.nilpotency.nilpotent) << ", lattice (Malcev) "
    << (r.lattice.applicable ? yn(r.lattice.lattice_exists) : "n/a") << "\n";
  if (full) o << report_json(r, true)["tensors"].dump(1) << "\n";
  return o.str();
}

}  // namespace ak

#pragma once

#include <string>
#include <vector>

#include "ak/constructions.hpp"
#include "ak/io.hpp"
#include "ak/twistor.hpp"

namespace ak {

struct GoldenRow {
  std::string group;
  std::string subject;
  std::string claim;
  std::string expected;
  std::string actual;
  bool pass = false;
};

inline std::string golden_group(const std::string& entry_name) {
  if (entry_name.rfind("ex", 0) == 0) return "table";
  if (entry_name.rfind("thurston", 0) == 0) return "thurston";
  if (entry_name.rfind("abelian", 0) == 0) return "abelian";
  return entry_name;
}

/// A filter matches a group name or a subject name exactly; empty matches everything.
inline bool golden_selected(const std::string& filter, const std::string& group, const std::string& subject) {
  return filter.empty() || filter == group || filter == subject;
}

namespace detail {

inline std::string span_text(const Subspace& s, const std::vector<std::string>& names) {
  std::string out = "<";
  for (const auto& v : s.vectors()) out += (out.size() > 1 ? ", " : "") + named_combination(v, names);
  return out + ">";
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

inline std::vector<GoldenRow> entry_goldens(const CatalogEntry& e) {
  std::vector<GoldenRow> rows;
  const std::string group = golden_group(e.name);
  const auto& names = e.triple.algebra().basis_names();
  const auto dr = classify(e.triple);
  const auto& x = e.expected;
  auto row = [&](std::string claim, std::string expected, std::string actual) {
    const bool pass = expected == actual;
    rows.push_back({group, e.name, std::move(claim), std::move(expected), std::move(actual), pass});
  };
  auto span_row = [&](const std::string& claim, const std::vector<Vector>& vs, const Subspace& got) {
    const Subspace want = Subspace::span(e.triple.dim(), vs);
    rows.push_back({group, e.name, claim, detail::span_text(want, names), detail::span_text(got, names), want == got});
  };
  if (x.image) span_row("Im N", *x.image, dr.image);
  if (x.image_involutive) row("Im N involutive", detail::yes_no(*x.image_involutive), detail::yes_no(dr.image_involutive));
  if (x.image_perp) span_row("(Im N)^perp", *x.image_perp, dr.image_perp);
  if (x.perp_involutive)
    row("(Im N)^perp involutive", detail::yes_no(*x.perp_involutive), detail::yes_no(dr.perp_involutive));
  if (x.maximally_non_integrable)
    row("maximally non integrable", detail::yes_no(*x.maximally_non_integrable),
        detail::yes_no(dr.maximally_non_integrable));
  if (x.integrable) row("integrable", detail::yes_no(*x.integrable), detail::yes_no(dr.integrable));
  if (x.norm_sq) row("|N|^2", to_string(*x.norm_sq), to_string(dr.norm_sq_N));
  if (x.nilpotent)
    row("nilpotent", detail::yes_no(*x.nilpotent), detail::yes_no(is_nilpotent(e.triple.algebra()).nilpotent));
  return rows;
}

inline std::vector<GoldenRow> twistor_goldens(std::size_t n) {
  std::vector<GoldenRow> rows;
  const std::string subject = "twistor(" + std::to_string(n) + ")";
  auto row = [&](std::string claim, bool expected, bool actual) {
    rows.push_back({"twistor", subject, std::move(claim), detail::yes_no(expected), detail::yes_no(actual),
                    expected == actual});
  };
  const auto m = build_twistor_model(n);
  const auto plus = twistor_nijenhuis(m, +1);
  const auto minus = twistor_nijenhuis(m, -1);
  row("J+ integrable", true, plus.integrable);
  if (n >= 2) {
    row("J- image = q + p", true, minus.maximally_non_integrable);
    row("J- image on p x p contains q", true, minus.image_pp.contains(m.q));
    const auto pos = positivity_report(m);
    row("J- positive", true, pos.minus.positive);
    row("J+ positive", false, pos.plus.positive);
  } else {
    row("J- integrable", true, minus.integrable);
  }
  return rows;
}

/// All golden claims for the given entries plus the twistor model for n = 1..3.
inline std::vector<GoldenRow> run_goldens(const std::vector<CatalogEntry>& entries, const std::string& filter = "") {
  std::vector<GoldenRow> rows;
  for (const auto& e : entries) {
    if (!golden_selected(filter, golden_group(e.name), e.name)) continue;
    for (auto& r : entry_goldens(e)) rows.push_back(std::move(r));
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::string subject = "twistor(" + std::to_string(n) + ")";
    if (!golden_selected(filter, "twistor", subject)) continue;
    for (auto& r : twistor_goldens(n)) rows.push_back(std::move(r));
  }
  return rows;
}

inline std::vector<GoldenRow> run_goldens(const std::string& filter = "") { return run_goldens(catalog(), filter); }

}  // namespace ak

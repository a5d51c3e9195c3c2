#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ak/symp.hpp"

namespace ak {

using Json = nlohmann::ordered_json;

inline Json scalar_json(const Scalar& s) { return to_string(s); }

inline Json vector_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(scalar_json(x));
  return a;
}

inline Json matrix_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vector_json(m.row(r)));
  return a;
}

/// "X1 - Y2", "1/2 X2 + Y2", "0" for the zero vector.
inline std::string named_combination(const Vector& v, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int s = sgn(v[i]);
    if (s == 0) continue;
    const Scalar a = abs(v[i]);
    if (out.empty())
      out += s < 0 ? "-" : "";
    else
      out += s < 0 ? " - " : " + ";
    if (a != 1) out += to_string(a) + " ";
    out += names[i];
  }
  return out.empty() ? "0" : out;
}

inline Json subspace_json(const Subspace& s, const std::vector<std::string>& names) {
  Json named = Json::array();
  for (const auto& v : s.vectors()) named.push_back(named_combination(v, names));
  Json j;
  j["dim"] = s.dim();
  j["rows"] = matrix_json(s.basis());
  j["named"] = named;
  return j;
}

namespace detail {

[[noreturn]] inline void field_error(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::Parse, "field '" + field + "': " + what);
}

inline Scalar scalar_field(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) field_error(field, "expected a rational string");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const Error& e) {
    field_error(field, e.what());
  }
}

inline Matrix matrix_field(const Json& doc, const std::string& field, std::size_t n) {
  if (!doc.contains(field)) field_error(field, "missing");
  const Json& rows = doc.at(field);
  if (!rows.is_array() || rows.size() != n)
    throw Error(ErrorKind::DimensionMismatch, "field '" + field + "': expected " + std::to_string(n) + " rows");
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const Json& row = rows[r];
    if (!row.is_array() || row.size() != n)
      throw Error(ErrorKind::DimensionMismatch,
                  "field '" + field + "[" + std::to_string(r) + "]': expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = scalar_field(row[c], field + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

inline std::size_t index_field(const Json& j, const std::string& field) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0))
    field_error(field, "expected a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace detail

/// Algebra part of the schema: name, dim, basis, brackets.
inline LieAlgebra algebra_from_json(const Json& doc) {
  using detail::field_error;
  if (!doc.is_object()) field_error("<root>", "expected an object");
  if (!doc.contains("dim")) field_error("dim", "missing");
  const std::size_t dim = detail::index_field(doc["dim"], "dim");
  std::vector<std::string> basis;
  if (doc.contains("basis")) {
    if (!doc["basis"].is_array()) field_error("basis", "expected an array of strings");
    for (const auto& b : doc["basis"]) {
      if (!b.is_string()) field_error("basis", "expected an array of strings");
      basis.push_back(b.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < dim; ++i) basis.push_back("e" + std::to_string(i + 1));
  }
  std::vector<Bracket> brackets;
  if (doc.contains("brackets")) {
    if (!doc["brackets"].is_array()) field_error("brackets", "expected an array");
    for (std::size_t k = 0; k < doc["brackets"].size(); ++k) {
      const Json& b = doc["brackets"][k];
      const std::string where = "brackets[" + std::to_string(k) + "]";
      if (!b.is_object() || !b.contains("i") || !b.contains("j") || !b.contains("coeffs"))
        field_error(where, "expected {i, j, coeffs}");
      Bracket br{detail::index_field(b["i"], where + ".i"), detail::index_field(b["j"], where + ".j"),
                 zero_vector(dim)};
      if (!b["coeffs"].is_object()) field_error(where + ".coeffs", "expected an object");
      for (const auto& [key, val] : b["coeffs"].items()) {
        std::size_t idx = 0;
        try {
          std::size_t used = 0;
          idx = std::stoul(key, &used);
          if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
          field_error(where + ".coeffs", "key '" + key + "' is not an index");
        }
        if (idx >= dim) throw Error(ErrorKind::DimensionMismatch, where + ".coeffs: index " + key + " out of range");
        br.coeffs[idx] = detail::scalar_field(val, where + ".coeffs." + key);
      }
      brackets.push_back(std::move(br));
    }
  }
  return LieAlgebra::validate(dim, std::move(basis), brackets);
}

inline SymplecticTriple triple_from_json(const Json& doc) {
  auto g = algebra_from_json(doc);
  const std::size_t n = g.dim();
  Matrix omega = detail::matrix_field(doc, "omega", n);
  Matrix j = detail::matrix_field(doc, "J", n);
  return build_triple(std::move(g), std::move(omega), std::move(j));
}

inline Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, source + ": " + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline SymplecticTriple load_triple(const std::string& path) {
  return triple_from_json(parse_json_text(read_file(path), path));
}

inline Json algebra_json(const LieAlgebra& g, const std::string& name) {
  Json j;
  j["name"] = name;
  j["dim"] = g.dim();
  j["basis"] = g.basis_names();
  Json br = Json::array();
  for (const auto& b : g.nonzero_brackets()) {
    Json coeffs = Json::object();
    for (std::size_t k = 0; k < b.coeffs.size(); ++k)
      if (sgn(b.coeffs[k]) != 0) coeffs[std::to_string(k)] = to_string(b.coeffs[k]);
    br.push_back({{"i", b.i}, {"j", b.j}, {"coeffs", coeffs}});
  }
  j["brackets"] = br;
  return j;
}

inline Json triple_json(const SymplecticTriple& t, const std::string& name) {
  Json j = algebra_json(t.algebra(), name);
  j["omega"] = matrix_json(t.omega());
  j["J"] = matrix_json(t.j());
  return j;
}

/// 64-bit FNV-1a, rendered as 16 hex digits.
inline std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xf];
  return out;
}

/// Content hash of the triple, independent of its name.
inline std::string triple_hash(const SymplecticTriple& t) { return fnv1a_hex(triple_json(t, "").dump()); }

}  // namespace ak

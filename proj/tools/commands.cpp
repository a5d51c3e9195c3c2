#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ak/ak.hpp"

namespace akt {
namespace {

using ak::Error;
using ak::ErrorKind;
using ak::Json;

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::NotACharacter:
    case ErrorKind::ZeroCharacter:
    case ErrorKind::PerfectAlgebra:
      return Invalid;
    case ErrorKind::UnknownName:
    case ErrorKind::NonpositiveParameter:
    case ErrorKind::Unsatisfiable:
      return Usage;
    case ErrorKind::SingularGram:
    case ErrorKind::IdentityViolation:
    case ErrorKind::InternalInvariantViolation:
    case ErrorKind::NoWitnessFound:
      return CheckFailed;
    default:
      return ak::is_validation_error(k) ? Invalid : CheckFailed;
  }
}

struct Global {
  std::string report = "text";
  bool full = false;
  bool json() const { return report == "json"; }
};

struct Loaded {
  ak::SymplecticTriple triple;
  std::string name;
};

/// A file path if one exists, otherwise a catalog name.
Loaded load_input(const std::string& what, std::optional<ak::Scalar> alpha) {
  if (std::filesystem::is_regular_file(what)) {
    const Json doc = ak::parse_json_text(ak::read_file(what), what);
    auto t = ak::triple_from_json(doc);
    std::string name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>()
                                                                       : std::filesystem::path(what).stem().string();
    return {std::move(t), std::move(name)};
  }
  auto e = ak::builtin(what, alpha);
  return {std::move(e.triple), e.name};
}

std::optional<ak::Scalar> parse_alpha(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return ak::parse_scalar(text);
}

ak::Vector parse_coords(const std::string& text, std::size_t dim) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  ak::Vector v;
  for (std::string tok; in >> tok;) v.push_back(ak::parse_scalar(tok));
  if (v.size() != dim)
    throw Error(ErrorKind::DimensionMismatch,
                "--xi has " + std::to_string(v.size()) + " entries, expected " + std::to_string(dim));
  return v;
}

void print_triple(std::ostream& out, const ak::SymplecticTriple& t, const std::string& name) {
  out << ak::triple_json(t, name).dump(2) << "\n";
}

int cmd_validate(const std::string& path, const Global& g, std::ostream& out) {
  const auto in = load_input(path, std::nullopt);
  if (g.json())
    out << Json{{"name", in.name}, {"dim", in.triple.dim()}, {"valid", true}}.dump(2) << "\n";
  else
    out << "ok: " << in.name << " (dim " << in.triple.dim() << ")\n";
  return Ok;
}

int cmd_analyze(const std::string& input, const std::string& alpha, const Global& g, std::ostream& out) {
  const auto in = load_input(input, parse_alpha(alpha));
  const auto r = ak::analyze(in.triple, in.name);
  if (g.json())
    out << ak::report_json(r, g.full).dump(2) << "\n";
  else
    out << ak::report_text(r, g.full);
  return Ok;
}

int cmd_goldens(const std::string& filter, const Global& g, std::ostream& out) {
  const auto rows = ak::run_goldens(filter);
  const bool all = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.pass; });
  if (g.json()) {
    Json a = Json::array();
    for (const auto& r : rows)
      a.push_back({{"group", r.group},
                   {"subject", r.subject},
                   {"claim", r.claim},
                   {"expected", r.expected},
                   {"actual", r.actual},
                   {"pass", r.pass}});
    out << Json{{"rows", a}, {"all_pass", all}}.dump(2) << "\n";
  } else {
    for (const auto& r : rows)
      out << (r.pass ? "PASS " : "FAIL ") << r.subject << ": " << r.claim << " = " << r.actual
          << (r.pass ? "" : " (expected " + r.expected + ")") << "\n";
    out << rows.size() << " claims, " << std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.pass; })
        << " failed\n";
  }
  if (rows.empty()) return Usage;
  return all ? Ok : CheckFailed;
}

int cmd_examples_list(const Global& g, std::ostream& out) {
  const auto names = ak::catalog_names();
  if (g.json()) {
    out << Json(names).dump(2) << "\n";
  } else {
    for (const auto& n : names) out << n << "\n";
  }
  return Ok;
}

int cmd_construct(const std::string& base, const std::string& op, const std::string& xi, const std::string& alpha,
                  std::ostream& out) {
  const auto in = load_input(base, parse_alpha(alpha));
  if (op == "product") {
    print_triple(out, ak::product_extension(in.triple), "product(" + in.name + ")");
    return Ok;
  }
  const ak::Vector v = xi.empty() ? ak::default_character(in.triple) : parse_coords(xi, in.triple.dim());
  print_triple(out, ak::character_extension(in.triple, v), "character(" + in.name + ")");
  return Ok;
}

int cmd_synthesize(std::size_t n, std::size_t k, const std::string& inv_image, const std::string& inv_perp,
                   std::ostream& out) {
  auto flag = [](const std::string& s) -> std::optional<bool> {
    if (s.empty()) return std::nullopt;
    return s == "y";
  };
  const auto t = ak::build_rank_example(n, k, flag(inv_image), flag(inv_perp));
  print_triple(out, t, "rank(" + std::to_string(n) + "," + std::to_string(k) + ")");
  return Ok;
}

int cmd_nspace(std::size_t n, const Global& g, std::ostream& out) {
  const std::size_t dim = ak::nijenhuis_space_dim(n);
  const std::size_t formula = ak::nijenhuis_space_formula(n);
  if (g.json())
    out << Json{{"n", n}, {"dim", dim}, {"formula", formula}, {"match", dim == formula}}.dump(2) << "\n";
  else
    out << "n = " << n << ": nullity " << dim << ", 2n(n^2-1)/3 = " << formula << (dim == formula ? " (match)" : " (MISMATCH)")
        << "\n";
  return dim == formula ? Ok : CheckFailed;
}

int cmd_twistor(std::size_t n, const std::string& sign_text, const Global& g, std::ostream& out) {
  const auto m = ak::build_twistor_model(n);
  std::vector<int> signs;
  if (sign_text.empty() || sign_text == "+") signs.push_back(+1);
  if (sign_text.empty() || sign_text == "-") signs.push_back(-1);
  Json j;
  j["n"] = n;
  j["dims"] = {{"ambient", m.ambient.dim()}, {"u", m.u_n.dim()}, {"q", m.q.dim()}, {"p", m.p.dim()}};
  std::ostringstream text;
  text << "so(1," << 2 * n << "): dim " << m.ambient.dim() << " = u(" << n << ") " << m.u_n.dim() << " + q "
       << m.q.dim() << " + p " << m.p.dim() << "\n";
  for (int s : signs) {
    const auto nj = ak::twistor_nijenhuis(m, s);
    const auto pos = ak::positivity_report(m, s);
    const std::string label = s > 0 ? "J+" : "J-";
    j[label] = {{"image_rank", nj.image.dim()},
                {"pp_image_contains_q", nj.image_pp.contains(m.q)},
                {"integrable", nj.integrable},
                {"maximally_non_integrable", nj.maximally_non_integrable},
                {"compatible", pos.compatible},
                {"positive", pos.positive},
                {"witness", pos.witness ? ak::vector_json(*pos.witness) : Json(nullptr)}};
    text << label << ": image rank " << nj.image.dim() << (nj.integrable ? ", integrable" : "")
         << (nj.maximally_non_integrable ? ", maximally non integrable" : "")
         << (pos.compatible ? ", compatible" : ", NOT compatible") << (pos.positive ? ", positive" : ", not positive");
    if (pos.witness)
      text << " (witness " << ak::named_combination(*pos.witness, m.ambient.basis_names())
           << ", kks(X,JX) = " << pos.witness_value << ")";
    text << "\n";
  }
  out << (g.json() ? j.dump(2) + "\n" : text.str());
  return Ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nijenhuis tensors of invariant almost Kahler structures", "akt"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--report", g.report, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--full", g.full, "include raw tensors in reports");
  app.fallthrough();

  std::string path, input, alpha, filter, base, op, xi, inv_image, inv_perp, sign, show_name;
  std::size_t n = 0, k = 0;

  auto* validate = app.add_subcommand("validate", "check a triple file");
  validate->add_option("path", path)->required();

  auto* analyze = app.add_subcommand("analyze", "full analysis of a triple file or catalog entry");
  analyze->add_option("input", input)->required();
  analyze->add_option("--alpha", alpha, "Thurston parameter");

  auto* goldens = app.add_subcommand("goldens", "check the catalog against its expected values");
  goldens->add_option("--filter", filter, "group (table, dim6, thurston, abelian, twistor) or entry name");

  auto* examples = app.add_subcommand("examples", "catalog access");
  examples->require_subcommand(1);
  auto* list = examples->add_subcommand("list", "list catalog names");
  auto* show = examples->add_subcommand("show", "print a catalog triple as JSON");
  show->add_option("name", show_name)->required();
  show->add_option("--alpha", alpha, "Thurston parameter");

  auto* construct = app.add_subcommand("construct", "product or character extension");
  construct->add_option("--base", base)->required();
  construct->add_option("--op", op)->required()->check(CLI::IsMember({"product", "character"}));
  construct->add_option("--xi", xi, "character coordinates on the dual basis");
  construct->add_option("--alpha", alpha, "Thurston parameter for a catalog base");

  auto* synth = app.add_subcommand("synthesize", "triple of dimension 2n with dim Im N = 2k");
  synth->add_option("--n", n)->required();
  synth->add_option("--k", k)->required();
  synth->add_option("--inv-image", inv_image)->check(CLI::IsMember({"y", "n"}));
  synth->add_option("--inv-perp", inv_perp)->check(CLI::IsMember({"y", "n"}));

  auto* nspace = app.add_subcommand("nspace-dim", "dimension of the space of Nijenhuis-type tensors");
  nspace->add_option("--n", n)->required()->check(CLI::PositiveNumber);

  auto* twistor = app.add_subcommand("twistor", "the so(1,2n) twistor model");
  twistor->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  twistor->add_option("--sign", sign)->check(CLI::IsMember({"+", "-"}));

  for (auto* sub : {validate, analyze, goldens, examples, list, show, construct, synth, nspace, twistor})
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : Usage;
  }

  try {
    if (validate->parsed()) return cmd_validate(path, g, out);
    if (analyze->parsed()) return cmd_analyze(input, alpha, g, out);
    if (goldens->parsed()) return cmd_goldens(filter, g, out);
    if (list->parsed()) return cmd_examples_list(g, out);
    if (show->parsed()) {
      const auto e = ak::builtin(show_name, parse_alpha(alpha));
      print_triple(out, e.triple, e.name);
      return Ok;
    }
    if (construct->parsed()) return cmd_construct(base, op, xi, alpha, out);
    if (synth->parsed()) return cmd_synthesize(n, k, inv_image, inv_perp, out);
    if (nspace->parsed()) return cmd_nspace(n, g, out);
    if (twistor->parsed()) return cmd_twistor(n, sign, g, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return Usage;
}

}  // namespace akt

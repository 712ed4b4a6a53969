// eiszeta: command-line front end for the library.
//
// Exit status: 0 when every item is PASS or FLAGGED, 1 when anything FAILs,
// 2 on a usage or input error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eiszeta/eiszeta.hpp"

using namespace eiszeta;

namespace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::vector<std::string>> latex;  // optional LaTeX cells, parallel to rows
};

struct Output {
  Json json;
  Table table;
  std::vector<std::string> notes;  // printed above the table
  std::vector<std::string> diagnostics;  // with the table, or on stderr for other formats
  int status = 0;
};

std::string render_table(const Output& out) {
  std::ostringstream os;
  for (const auto& n : out.diagnostics) os << n << "\n";
  for (const auto& n : out.notes) os << n << "\n";
  const Table& t = out.table;
  std::vector<std::size_t> width(t.header.size(), 0);
  for (std::size_t c = 0; c < t.header.size(); ++c) width[c] = t.header[c].size();
  for (const auto& r : t.rows)
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      s += cells[c];
      if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    os << s << "\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return os.str();
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

std::string render_csv(const Table& t) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? "," : "") << csv_cell(cells[c]);
    os << "\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return os.str();
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '_' || ch == '&' || ch == '%' || ch == '#') out += '\\';
    out += ch;
  }
  return out;
}

std::string render_latex(const Table& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& cells = i < t.latex.size() ? t.latex[i] : t.rows[i];
    const bool raw = i < t.latex.size();
    for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? " & " : "") << (raw ? cells[c] : latex_escape(cells[c]));
    os << " \\\\\n";
  }
  return os.str();
}

std::string render(const Output& out, const std::string& format) {
  if (format == "json") return out.json.dump(2) + "\n";
  if (format == "csv") return render_csv(out.table);
  if (format == "latex") return render_latex(out.table);
  return render_table(out);
}

std::string poly_math(const RationalHomogPoly& f) { return "$" + to_latex(f) + "$"; }
std::string poly_math(const UniPoly& p) { return "$" + to_latex(p) + "$"; }

std::vector<int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) return {std::stoi(text)};
    int a = std::stoi(text.substr(0, dots)), b = std::stoi(text.substr(dots + 2));
    if (a > b) throw Error(Errc::InvalidArgument, "empty weight range '" + text + "'");
    std::vector<int> r;
    for (int l = a; l <= b; ++l) r.push_back(l);
    return r;
  } catch (const std::logic_error&) {
    throw Error(Errc::InvalidArgument, "malformed weight range '" + text + "' (expected A..B)");
  }
}

const char* kTypeHelp = "code type: I, II, III or IV";

void add_type(CLI::App* sub, std::string& type) {
  sub->add_option("--type", type, kTypeHelp)->required()->check(CLI::IsMember({"I", "II", "III", "IV"}));
}

std::vector<CodeType> parse_types(const std::vector<std::string>& names) {
  std::vector<CodeType> out;
  for (const auto& n : names) out.push_back(parse_type(n));
  return out;
}

Output from_reports(const std::vector<CheckReport>& reports, bool with_definition) {
  Output out;
  out.table.header = {"suite", "subject", "status", "detail"};
  Json arr = Json::array();
  for (const auto& r : reports) {
    arr.push_back(to_json(r));
    for (const auto& it : r.items) {
      std::string detail;
      if (it.status != Status::PASS) {
        Json w = it.witness;
        w.erase("definition");
        detail = w.dump();
      }
      out.table.rows.push_back({r.suite, it.subject, std::string(status_name(it.status)), detail});
    }
  }
  out.json = Json{{"reports", arr}};
  if (with_definition) {
    out.json["interlace_definition"] = kInterlaceDefinition;
    out.notes.push_back(std::string("interlacing: ") + kInterlaceDefinition);
  }
  std::size_t pass = 0, fail = 0, flagged = 0;
  for (const auto& r : reports) {
    pass += r.count(Status::PASS);
    fail += r.count(Status::FAIL);
    flagged += r.count(Status::FLAGGED);
  }
  out.json["summary"] = Json{{"pass", pass}, {"fail", fail}, {"flagged", flagged}};
  out.status = exit_code(reports);
  return out;
}

MatrixGroup group_for(CodeType t, const std::string& variant) {
  if (variant == "twisted") {
    if (t != CodeType::II) throw Error(Errc::InvalidArgument, "the twisted variant exists only for Type II");
    return scalar_twisted_type_ii();
  }
  return builtin_group(t);
}

// gen -------------------------------------------------------------------------

struct GenArgs {
  std::string type;
  int ell = 0;
  std::string method = "average";
  std::string bound = "completed";
  std::string variant = "printed";
};

Output cmd_gen(const GenArgs& a) {
  const CodeType t = parse_type(a.type);
  const SumBound bound = a.bound == "printed" ? SumBound::Printed : SumBound::Completed;
  Output out;
  out.table.header = {"type", "l", "method", "tilde phi_l", "d"};
  out.json = Json{{"type", a.type}, {"ell", a.ell}};

  auto row = [&](const std::string& method, const std::optional<RationalHomogPoly>& f) {
    std::string d = "-";
    if (f && f->coeffs().size() > 1) d = std::to_string(min_distance(*f));
    std::string text = f ? to_string(*f) : "0";
    out.table.rows.push_back({a.type, std::to_string(a.ell), method, text, d});
    out.table.latex.push_back({a.type, std::to_string(a.ell), method, f ? poly_math(*f) : "$0$", d});
  };

  std::optional<RationalHomogPoly> avg, closed;
  if (a.method == "average" || a.method == "both") {
    MatrixGroup g = group_for(t, a.variant);
    EisensteinPoly e = average(g, a.ell);
    avg = e.tilde;
    out.json["average"] = Json{{"group_order", g.order()},
                               {"variant", a.variant},
                               {"raw", to_json(e.raw)},
                               {"tilde", e.tilde ? to_json(*e.tilde) : Json(nullptr)}};
    row("average", avg);
  }
  if (a.method == "closed" || a.method == "both") {
    closed = closed_form(t, a.ell, bound);
    out.json["closed"] = Json{{"bound", a.bound}, {"tilde", closed ? to_json(*closed) : Json(nullptr)}};
    row("closed", closed);
  }
  if (a.method == "both") {
    bool agree = avg == closed;
    out.json["agree"] = agree;
    out.notes.push_back(std::string("average and closed form ") + (agree ? "agree" : "DISAGREE"));
    out.status = agree ? 0 : 1;
  }
  return out;
}

// group -----------------------------------------------------------------------

Output cmd_group(const std::string& type, const std::string& variant) {
  MatrixGroup g = group_for(parse_type(type), variant);
  Output out;
  out.json = to_json(g);
  out.json["axioms_hold"] = check_group_axioms(g);
  out.notes.push_back("G_" + type + " (" + variant + "): order " + std::to_string(g.order()) +
                      ", coordinates in the basis 1, z, ..., z^7 with z = exp(2 pi i/24)");
  out.table.header = {"#", "a", "b", "c", "d"};
  for (std::size_t k = 0; k < g.order(); ++k) {
    const Mat2& m = g.elements()[k];
    out.table.rows.push_back({std::to_string(k), m.a.to_string(), m.b.to_string(), m.c.to_string(), m.d.to_string()});
  }
  return out;
}

// zeta ------------------------------------------------------------------------

struct ZetaArgs {
  std::string type;
  int ell = 0;
  std::string method = "linear";
  std::string input;
  std::string q;
};

Output cmd_zeta(const ZetaArgs& a) {
  std::optional<CodeType> t;
  RationalHomogPoly f;
  std::string label;
  if (!a.input.empty()) {
    std::ifstream in(a.input);
    if (!in) throw Error(Errc::InvalidArgument, "cannot read " + a.input);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& e) {
      throw Error(Errc::InvalidArgument, std::string("malformed JSON: ") + e.what());
    }
    f = homog_poly_from_json(j);
    label = a.input;
  } else {
    if (a.type.empty()) throw Error(Errc::InvalidArgument, "either --type/--ell or --input is required");
    t = parse_type(a.type);
    EisensteinPoly e = average(builtin_group(*t), a.ell);
    if (!e.tilde)
      throw Error(Errc::InvalidWeight, "phi_" + std::to_string(a.ell) + " vanishes for type " + a.type);
    f = *e.tilde;
    label = "type " + a.type + " l=" + std::to_string(a.ell);
  }
  BigRational q = !a.q.empty() ? parse_rational(a.q) : t ? default_q(*t) : BigRational(2);

  std::vector<ZetaResult> results;
  if (a.method == "linear" || a.method == "all") results.push_back(zeta_linear(f, q));
  if (a.method == "series" || a.method == "all") results.push_back(zeta_series(f, q));
  if (a.method == "closed" || (a.method == "all" && t && *t != CodeType::II && a.q.empty())) {
    if (!t) throw Error(Errc::InvalidArgument, "the closed method needs --type and --ell");
    if (!a.q.empty() && q != default_q(*t))
      throw Error(Errc::InvalidArgument, "the closed form is tied to q = " + to_string(default_q(*t)));
    results.push_back(closed_form_zeta(*t, a.ell));
  }

  Output out;
  out.notes.push_back(label + ": f = " + to_string(f) + ", q = " + to_string(q));
  out.table.header = {"method", "n", "d", "P(T)"};
  Json arr = Json::array();
  for (const auto& z : results) {
    arr.push_back(to_json(z));
    out.table.rows.push_back({std::string(method_name(z.method)), std::to_string(z.n), std::to_string(z.d), to_string(z.P)});
    out.table.latex.push_back(
        {std::string(method_name(z.method)), std::to_string(z.n), std::to_string(z.d), poly_math(z.P)});
  }
  out.json = Json{{"subject", label}, {"f", to_json(f)}, {"q", to_string(q)}, {"results", arr}};
  bool agree = std::all_of(results.begin(), results.end(), [&](const ZetaResult& z) { return z.P == results[0].P; });
  bool identity = verify_lemma_identity(f, q, results[0].P);
  out.json["agree"] = agree;
  out.json["identity_verified"] = identity;
  if (results.size() > 1) out.notes.push_back(std::string("routes ") + (agree ? "agree" : "DISAGREE"));
  out.status = agree && identity ? 0 : 1;
  return out;
}

// rha / interlace -------------------------------------------------------------

Output cmd_rha(const std::string& type, const std::string& range, double tol) {
  const CodeType t = parse_type(type);
  const BigRational q = default_q(t);
  MatrixGroup g = builtin_group(t);
  Output out;
  out.table.header = {"type", "l", "degree", "target radius", "max radius error", "status"};
  Json items = Json::array();
  for (int ell : parse_range(range)) {
    if (ell < 1) throw Error(Errc::InvalidArgument, "weights must be positive");
    if (!is_valid_weight(t, ell)) continue;
    UniPoly P = zeta_linear(*average(g, ell).tilde, q).P;
    RootReport r = rha_check(P, q, tol);
    Json j = to_json(r);
    j["ell"] = ell;
    j["P"] = to_json(P);
    items.push_back(j);
    char err[32], rad[32];
    std::snprintf(err, sizeof err, "%.3e", r.max_radius_error);
    std::snprintf(rad, sizeof rad, "%.12f", r.target_radius);
    out.table.rows.push_back({type, std::to_string(ell), std::to_string(P.degree()), rad, err, r.passed ? "PASS" : "FAIL"});
    if (!r.passed) out.status = 1;
  }
  out.json = Json{{"type", type}, {"q", to_string(q)}, {"tol", tol}, {"items", items}};
  return out;
}

Output cmd_interlace(const std::string& type, int ell, std::optional<int> step, double tol) {
  const CodeType t = parse_type(type);
  const BigRational q = default_q(t);
  const int s = step.value_or(interlace_step(t));
  MatrixGroup g = builtin_group(t);
  Output out;
  out.notes.push_back(std::string("definition: ") + kInterlaceDefinition);
  out.table.header = {"type", "l", "l+step", "status", "reason"};
  Json j{{"type", type}, {"ell", ell}, {"step", s}, {"nominal_step", nominal_step(t)}, {"definition", kInterlaceDefinition}};
  EisensteinPoly lo = average(g, ell), hi = average(g, ell + s);
  if (!lo.tilde || !hi.tilde) {
    int dead = lo.tilde ? ell + s : ell;
    std::string reason = "vacuous: phi_" + std::to_string(dead) + " vanishes";
    j["status"] = "FLAGGED";
    j["reason"] = reason;
    out.table.rows.push_back({type, std::to_string(ell), std::to_string(ell + s), "FLAGGED", reason});
    out.json = j;
    return out;
  }
  InterlaceResult r = interlace_check(zeta_linear(*lo.tilde, q).P, zeta_linear(*hi.tilde, q).P, q, tol);
  j["status"] = r.passed ? "PASS" : "FAIL";
  j["reason"] = r.reason;
  j["small_args"] = r.small_args;
  j["large_args"] = r.large_args;
  out.table.rows.push_back({type, std::to_string(ell), std::to_string(ell + s), r.passed ? "PASS" : "FAIL", r.reason});
  out.json = j;
  out.status = r.passed ? 0 : 1;
  return out;
}

// padic -----------------------------------------------------------------------

Output cmd_sweep(const std::vector<std::string>& types, const std::vector<std::uint64_t>& primes,
                 const std::vector<std::string>& targets, int order) {
  std::vector<SweepTarget> what;
  for (const auto& s : targets) what.push_back(parse_target(s));
  CheckReport rep{"p-integrality at l = 2(p-1)", {}};
  for (const auto& s : integrality_sweep(parse_types(types), primes, what, order)) rep.items.push_back(to_check_item(s));
  return from_reports({rep}, false);
}

Output cmd_lemma(const std::vector<std::string>& types, const std::vector<std::uint64_t>& primes) {
  Output out;
  out.table.header = {"type", "p", "l", "expression", "value", "residue", "vanishes"};
  Json arr = Json::array();
  for (CodeType t : parse_types(types))
    for (auto p : primes) {
      LemmaModResult r = lemma_mod_check(t, p);
      arr.push_back(Json{{"type", type_name(t)}, {"p", p}, {"ell", r.ell}, {"expression", r.expression},
                         {"value", r.value.get_str()}, {"residue", r.residue}, {"vanishes", r.vanishes}});
      out.table.rows.push_back({std::string(type_name(t)), std::to_string(p), std::to_string(r.ell), r.expression,
                                r.value.get_str(), std::to_string(r.residue), r.vanishes ? "yes" : "no"});
    }
  out.json = Json{{"items", arr}};
  return out;
}

// modular ---------------------------------------------------------------------

Output series_output(const QExpansion& e, const std::string& variable) {
  Output out;
  out.notes.push_back(e.label + " (exponents in units of 1/" + std::to_string(e.series.denom()) + " in q)");
  out.table.header = {"exponent", "coefficient"};
  for (int k = 0; k < e.series.order(); ++k) {
    const BigRational& c = e.series.dense()[k];
    if (!is_zero(c)) out.table.rows.push_back({variable + "^" + std::to_string(k), to_string(c)});
  }
  out.json = Json{{"label", e.label}, {"series", to_json(e.series)}};
  return out;
}

Output cmd_modular_integrality(const std::vector<std::uint64_t>& primes, int order) {
  CheckReport rep{"modular integrality", {}};
  for (auto p : primes) {
    require_prime(p);
    if (p < 5) throw Error(Errc::InvalidArgument, "psi_{p-1} needs p >= 5");
    QExpansion psi = eisenstein_series(static_cast<int>(p - 1), order);
    IntegralityReport ir = series_integrality(psi, p);
    rep.add(psi.label + " p=" + std::to_string(p), "coefficients are p-integral", ir.passed(), to_json(ir));
  }
  for (const auto& s : integrality_sweep({CodeType::I, CodeType::II, CodeType::III, CodeType::IV}, primes,
                                         {SweepTarget::THETA}, order))
    rep.items.push_back(to_check_item(s));
  return from_reports({rep}, false);
}

// tables ----------------------------------------------------------------------

Output cmd_tables(const std::vector<int>& ells, const std::string& variant) {
  MatrixGroup g = group_for(CodeType::II, variant);
  Output out;
  out.table.header = {"l", "tilde phi_l", "P(T)", "status"};
  Json rows = Json::array();
  for (int ell : ells) {
    const PublishedRow* row = nullptr;
    for (const auto& r : kPublishedTypeII)
      if (r.ell == ell) row = &r;
    if (!row) throw Error(Errc::InvalidArgument, "no published row at l = " + std::to_string(ell));
    EisensteinPoly e = average(g, ell);
    std::string phi = e.tilde ? to_string(*e.tilde) : "0";
    std::string zeta = "-";
    std::string zeta_latex = "-";
    if (e.tilde) {
      UniPoly P = zeta_linear(*e.tilde, 2).P;
      zeta = to_string(P);
      zeta_latex = poly_math(P);
    }
    bool match = phi == row->eisenstein && zeta == row->zeta;
    Json j{{"ell", ell}, {"eisenstein", phi}, {"zeta", zeta}, {"match", match}};
    if (!match) {
      j["expected"] = Json{{"eisenstein", row->eisenstein}, {"zeta", row->zeta}};
      out.diagnostics.push_back("MismatchAgainstPaper at l=" + std::to_string(ell) + ":");
      if (phi != row->eisenstein) {
        out.diagnostics.push_back("  - phi: " + std::string(row->eisenstein));
        out.diagnostics.push_back("  + phi: " + phi);
      }
      if (zeta != row->zeta) {
        out.diagnostics.push_back("  - P:   " + std::string(row->zeta));
        out.diagnostics.push_back("  + P:   " + zeta);
      }
      out.status = 1;
    }
    rows.push_back(j);
    out.table.rows.push_back({std::to_string(ell), phi, zeta, match ? "match" : "MISMATCH"});
    out.table.latex.push_back({std::to_string(ell), e.tilde ? poly_math(*e.tilde) : "$0$", zeta_latex});
  }
  out.json = Json{{"group_order", g.order()}, {"variant", variant}, {"rows", rows}};
  if (out.status) out.json["error"] = "MismatchAgainstPaper";
  return out;
}

// verify ----------------------------------------------------------------------

const std::vector<std::string> kSuites{"published-eisenstein", "published-zeta", "closed-forms",
                                       "zeta",                 "rha",            "interlace",
                                       "integrality",          "discrepancies",  "eisenstein-series",
                                       "groups"};

Output cmd_verify(const VerifyConfig& cfg, std::vector<std::string> suites) {
  if (suites.empty()) suites = kSuites;
  std::vector<CheckReport> reports;
  bool interlace = false;
  for (const auto& name : kSuites) {
    if (std::find(suites.begin(), suites.end(), name) == suites.end()) continue;
    try {
      if (name == "published-eisenstein") reports.push_back(check_published_eisenstein());
      else if (name == "published-zeta") reports.push_back(check_published_zeta());
      else if (name == "closed-forms") reports.push_back(check_closed_forms(cfg));
      else if (name == "zeta") reports.push_back(check_zeta_routes(cfg));
      else if (name == "rha") reports.push_back(check_rha(cfg));
      else if (name == "interlace") reports.push_back(check_interlacing(cfg)), interlace = true;
      else if (name == "integrality") reports.push_back(check_integrality(cfg));
      else if (name == "discrepancies") reports.push_back(check_discrepancies());
      else if (name == "eisenstein-series") reports.push_back(check_eisenstein_series(cfg));
      else if (name == "groups") reports.push_back(check_groups());
    } catch (const Error& e) {
      CheckReport r{name, {}};
      r.add(name, "suite completed", false, Json{{"error", errc_name(e.code())}, {"message", e.what()}});
      reports.push_back(r);
    }
  }
  return from_reports(reports, interlace);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eisenstein polynomials of self-dual code types and their Duursma zeta polynomials"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "table";
  std::string out_path;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json", "csv", "latex"}));
  app.add_option("--out", out_path, "write output to this file instead of stdout");
  app.set_config("--config", "", "read options from a key=value file");

  Output result;
  std::function<Output()> action;

  // gen
  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Eisenstein polynomial of a type and weight");
  add_type(gen_cmd, gen.type);
  gen_cmd->add_option("--ell", gen.ell, "weight l")->required()->check(CLI::Range(0, 400));
  gen_cmd->add_option("--method", gen.method, "average, closed or both")
      ->check(CLI::IsMember({"average", "closed", "both"}));
  gen_cmd->add_option("--bound", gen.bound, "closed-form summation bound: completed (0<j<=l) or printed (0<j<l)")
      ->check(CLI::IsMember({"completed", "printed"}));
  gen_cmd->add_option("--variant", gen.variant, "group variant: printed, or twisted (Type II, order 96)")
      ->check(CLI::IsMember({"printed", "twisted"}));
  gen_cmd->callback([&] { action = [&] { return cmd_gen(gen); }; });

  // group
  std::string group_type, group_variant = "printed";
  auto* group_cmd = app.add_subcommand("group", "list the elements of a builtin group");
  add_type(group_cmd, group_type);
  group_cmd->add_option("--variant", group_variant, "printed or twisted")->check(CLI::IsMember({"printed", "twisted"}));
  group_cmd->callback([&] { action = [&] { return cmd_group(group_type, group_variant); }; });

  // zeta
  auto* zeta_cmd = app.add_subcommand("zeta", "Duursma zeta polynomials");
  zeta_cmd->require_subcommand(1);
  ZetaArgs za;
  auto* compute = zeta_cmd->add_subcommand("compute", "zeta polynomial of an Eisenstein polynomial or input file");
  compute->add_option("--type", za.type, kTypeHelp)->check(CLI::IsMember({"I", "II", "III", "IV"}));
  compute->add_option("--ell", za.ell, "weight l")->check(CLI::Range(1, 400));
  compute->add_option("--method", za.method, "linear, series, closed or all")
      ->check(CLI::IsMember({"linear", "series", "closed", "all"}));
  compute->add_option("--input", za.input, "JSON polynomial {\"n\": N, \"coeffs\": {\"i\": \"a/b\"}}")
      ->check(CLI::ExistingFile);
  compute->add_option("--q", za.q, "Duursma parameter (defaults to q of the type, or 2)");
  compute->callback([&] { action = [&] { return cmd_zeta(za); }; });

  std::string rha_type, rha_range;
  double rha_tol = 1e-9;
  auto setup_rha = [&](CLI::App* c) {
    add_type(c, rha_type);
    auto* range = c->add_option("--ell-range", rha_range, "weights A..B (or a single weight)");
    c->add_option("--ell", rha_range, "single weight")->excludes(range);
    c->add_option("--tol", rha_tol, "radius tolerance")->check(CLI::PositiveNumber);
    c->callback([&] {
      if (rha_range.empty()) throw CLI::RequiredError("--ell-range or --ell");
      action = [&] { return cmd_rha(rha_type, rha_range, rha_tol); };
    });
  };
  setup_rha(zeta_cmd->add_subcommand("rha", "root radii against 1/sqrt(q)"));
  setup_rha(app.add_subcommand("rha", "root radii against 1/sqrt(q)"));

  std::string il_type;
  int il_ell = 0;
  std::optional<int> il_step;
  double il_tol = 1e-9;
  auto setup_interlace = [&](CLI::App* c) {
    add_type(c, il_type);
    c->add_option("--ell", il_ell, "lower weight")->required()->check(CLI::Range(1, 400));
    c->add_option("--step", il_step, "weight step (default: 2, 8, 4, 2 by type)")->check(CLI::Range(1, 400));
    c->add_option("--tol", il_tol, "coincidence and radius tolerance")->check(CLI::PositiveNumber);
    c->callback([&] { action = [&] { return cmd_interlace(il_type, il_ell, il_step, il_tol); }; });
  };
  setup_interlace(zeta_cmd->add_subcommand("interlace", "root interlacing of P_l and P_{l+step}"));
  setup_interlace(app.add_subcommand("interlace", "root interlacing of P_l and P_{l+step}"));

  // padic
  auto* padic = app.add_subcommand("padic", "p-adic checks");
  padic->require_subcommand(1);
  std::vector<std::string> sw_types{"I", "II", "III", "IV"}, sw_targets{"eis", "zeta", "theta"};
  std::vector<std::uint64_t> sw_primes{5, 7, 11, 13};
  int sw_order = 200;
  auto* sweep = padic->add_subcommand("sweep", "integrality sweep at l = 2(p-1)");
  sweep->add_option("--types", sw_types, "comma-separated types")->delimiter(',')->check(
      CLI::IsMember({"I", "II", "III", "IV"}));
  sweep->add_option("--primes", sw_primes, "comma-separated odd primes")->delimiter(',');
  sweep->add_option("--targets", sw_targets, "eis, zeta, theta")->delimiter(',')->check(
      CLI::IsMember({"eis", "zeta", "theta"}));
  sweep->add_option("--order", sw_order, "theta truncation order in lattice units")->check(CLI::Range(1, 100000));
  sweep->callback([&] { action = [&] { return cmd_sweep(sw_types, sw_primes, sw_targets, sw_order); }; });

  std::vector<std::string> lm_types{"I", "III", "IV"};
  std::vector<std::uint64_t> lm_primes;
  auto* lemma = padic->add_subcommand("lemma", "normalizer residues mod p");
  lemma->add_option("--type,--types", lm_types, "types I, III, IV")->delimiter(',')->check(
      CLI::IsMember({"I", "III", "IV"}));
  lemma->add_option("--p,--primes", lm_primes, "odd primes")->delimiter(',')->required();
  lemma->callback([&] { action = [&] { return cmd_lemma(lm_types, lm_primes); }; });

  // modular
  auto* modular = app.add_subcommand("modular", "q-expansions");
  modular->require_subcommand(1);
  int th_parity = 0, md_order = 200, es_k = 4;
  auto* theta = modular->add_subcommand("theta", "theta constant f0 or f1 on the lattice u^4 = q");
  theta->add_option("--parity", th_parity, "0 for f0, 1 for f1")->check(CLI::IsMember({0, 1}));
  theta->add_option("--order", md_order, "truncation order")->check(CLI::Range(1, 100000));
  theta->callback([&] { action = [&] { return series_output(theta_expansion(th_parity, md_order), "u"); }; });

  auto* es = modular->add_subcommand("eisenstein-series", "psi_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n");
  es->add_option("--k", es_k, "weight")->required()->check(CLI::Range(2, 1000));
  es->add_option("--order", md_order, "number of q-terms")->check(CLI::Range(1, 100000));
  es->callback([&] { action = [&] { return series_output(eisenstein_series(es_k, md_order), "q"); }; });

  std::string tm_type;
  int tm_ell = 0;
  auto* tmap = modular->add_subcommand("theta-map", "Th(tilde phi_l) = tilde phi_l(f0, f1)");
  add_type(tmap, tm_type);
  tmap->add_option("--ell", tm_ell, "weight")->required()->check(CLI::Range(1, 400));
  tmap->add_option("--order", md_order, "truncation order in lattice units")->check(CLI::Range(1, 100000));
  tmap->callback([&] {
    action = [&] {
      EisensteinPoly e = average(builtin_group(parse_type(tm_type)), tm_ell);
      if (!e.tilde) throw Error(Errc::InvalidWeight, "phi_" + std::to_string(tm_ell) + " vanishes for type " + tm_type);
      return series_output(theta_map(*e.tilde, md_order), "u");
    };
  });

  std::vector<std::uint64_t> mi_primes{5, 7, 11, 13};
  auto* mint = modular->add_subcommand("integrality", "psi_{p-1} and theta images at l = 2(p-1)");
  mint->add_option("--primes", mi_primes, "comma-separated primes >= 5")->delimiter(',');
  mint->add_option("--order", md_order, "truncation order")->check(CLI::Range(1, 100000));
  mint->callback([&] { action = [&] { return cmd_modular_integrality(mi_primes, md_order); }; });

  // tables
  std::vector<int> tb_ells{8, 12};
  std::string tb_variant = "printed";
  auto* tables = app.add_subcommand("tables", "recompute the published Type II examples and compare");
  tables->add_option("--ell", tb_ells, "rows to compute (8, 12)")->delimiter(',')->check(CLI::IsMember({8, 12}));
  tables->add_option("--variant", tb_variant, "printed or twisted")->check(CLI::IsMember({"printed", "twisted"}));
  tables->callback([&] { action = [&] { return cmd_tables(tb_ells, tb_variant); }; });

  // verify
  VerifyConfig cfg;
  std::vector<std::string> vf_types{"I", "II", "III", "IV"}, vf_suites;
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--types", vf_types, "types for the RHA, interlacing and integrality suites")
      ->delimiter(',')
      ->check(CLI::IsMember({"I", "II", "III", "IV"}));
  verify->add_option("--suite", vf_suites, "suites to run (default: all)")->delimiter(',')->check(CLI::IsMember(kSuites));
  verify->add_option("--ell-max", cfg.ell_max, "largest weight")->check(CLI::Range(1, 200));
  verify->add_option("--interlace-ell-max", cfg.interlace_ell_max, "largest lower weight for interlacing")
      ->check(CLI::Range(1, 200));
  verify->add_option("--primes", cfg.primes, "primes for integrality")->delimiter(',');
  verify->add_option("--tol", cfg.tol, "root tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--order", cfg.order, "series truncation order")->check(CLI::Range(1, 100000));
  verify->add_option("--random", cfg.random_enumerators, "random enumerators for the zeta suite")
      ->check(CLI::Range(0, 100000));
  verify->add_option("--seed", cfg.seed, "seed for the random enumerators");
  verify->add_option("--step", cfg.step, "interlacing step for every type")->check(CLI::Range(1, 400));
  verify->callback([&] {
    action = [&] {
      cfg.types = parse_types(vf_types);
      return cmd_verify(cfg, vf_suites);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    result = action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::RootFindingDiverged ? 1 : 2;
  }

  if (format != "table")
    for (const auto& d : result.diagnostics) std::cerr << d << "\n";
  const std::string text = render(result, format);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out_path);
    if (!os) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    os << text;
  }
  return result.status;
}

#pragma once

// The verification suites run by `eiszeta verify` and the acceptance test.
// Every suite returns a CheckReport whose items are PASS/FAIL computational
// outcomes, or FLAGGED where a published claim is known not to hold as
// printed (or holds only vacuously).

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "eiszeta/eisenstein.hpp"
#include "eiszeta/groups.hpp"
#include "eiszeta/modular.hpp"
#include "eiszeta/padic.hpp"
#include "eiszeta/report.hpp"
#include "eiszeta/serialize.hpp"
#include "eiszeta/zeta.hpp"

namespace eiszeta {

struct VerifyConfig {
  std::vector<CodeType> types{CodeType::I, CodeType::II, CodeType::III, CodeType::IV};
  int ell_max = 40;
  int interlace_ell_max = 38;
  std::vector<std::uint64_t> primes{5, 7, 11, 13};
  double tol = 1e-9;
  int order = 200;
  int random_enumerators = 50;
  int random_max_degree = 12;
  std::uint64_t seed = 20190601;
  std::optional<int> step;  // overrides the interlacing step for every type
};

/// Published example values, as rendered strings.
struct PublishedRow {
  int ell;
  const char* eisenstein;
  const char* zeta;
};

inline constexpr PublishedRow kPublishedTypeII[] = {
    {8, "x^8+14x^4y^4+y^8", "1/5+2T/5+2T^2/5"},
    {12, "x^12-33x^8y^4-33x^4y^8+y^12", "-1/15-2T/15-2T^2/15+4T^4/15+8T^5/15+8T^6/15"},
};

inline RationalHomogPoly published_type_ii_polynomial(int ell) {
  if (ell == 8) return RationalHomogPoly(8, {{0, 1}, {4, 14}, {8, 1}});
  if (ell == 12) return RationalHomogPoly(12, {{0, 1}, {4, -33}, {8, -33}, {12, 1}});
  throw Error(Errc::InvalidArgument, "no published Type II example at this weight");
}

/// Type II variant whose Hadamard generator carries the extra scalar (1+i)/sqrt2.
/// It has order 96 and, unlike the printed generators, keeps phi_12 nonzero.
inline MatrixGroup scalar_twisted_type_ii() {
  auto gens = builtin_generators(CodeType::II);
  gens[0] = gens[0].scaled(cyclo_symbol(CycloSymbol::ZETA8));
  return generate_closure(gens);
}

inline std::string tilde_text(const EisensteinPoly& e) { return e.tilde ? to_string(*e.tilde) : "0"; }

// Published Eisenstein examples, by group averaging.
inline CheckReport check_published_eisenstein() {
  CheckReport rep{"published Eisenstein polynomials (type II)", {}};
  MatrixGroup g = builtin_group(CodeType::II);
  std::optional<MatrixGroup> twisted;
  for (const auto& row : kPublishedTypeII) {
    EisensteinPoly e = average(g, row.ell);
    const std::string got = tilde_text(e);
    Json w{{"expected", row.eisenstein}, {"computed", got}, {"group_order", g.order()}};
    if (got != row.eisenstein) {
      if (!twisted) twisted = scalar_twisted_type_ii();
      w["note"] =
          "the printed generators contain the scalar matrix exp(i pi/4) I, which kills phi_l unless 8 | l";
      w["twisted_group_order"] = twisted->order();
      w["twisted_group_computed"] = tilde_text(average(*twisted, row.ell));
    }
    rep.add("l=" + std::to_string(row.ell), "normalized average over G_II equals the published example",
            got == row.eisenstein, w);
  }
  return rep;
}

// Published zeta examples, applied to the published polynomials.
inline CheckReport check_published_zeta() {
  CheckReport rep{"published zeta polynomials (type II, q=2)", {}};
  for (const auto& row : kPublishedTypeII) {
    ZetaResult z = zeta_linear(published_type_ii_polynomial(row.ell), 2);
    const std::string got = to_string(z.P);
    rep.add("l=" + std::to_string(row.ell), "zeta polynomial of the published Eisenstein example",
            got == row.zeta, Json{{"expected", row.zeta}, {"computed", got}});
  }
  return rep;
}

// Closed Eisenstein forms against the averaging oracle.
inline CheckReport check_closed_forms(const VerifyConfig& cfg) {
  CheckReport rep{"closed Eisenstein forms vs group average", {}};
  for (CodeType t : {CodeType::I, CodeType::III, CodeType::IV}) {
    MatrixGroup g = builtin_group(t);
    std::vector<int> printed_bound_mismatch;
    for (int ell = 1; ell <= cfg.ell_max + 1; ++ell) {
      EisensteinPoly e = average(g, ell);
      auto cf = closed_form(t, ell);
      const std::string subject = "type " + std::string(type_name(t)) + " l=" + std::to_string(ell);
      const bool vanishing_ok = e.tilde.has_value() == cf.has_value() && e.raw.is_zero() == !cf.has_value();
      if (!e.tilde || !cf || ell > cfg.ell_max) {
        rep.add(subject, "vanishing matches the closed-form case split", vanishing_ok,
                Json{{"average_zero", e.raw.is_zero()}, {"closed_form_zero", !cf.has_value()}});
        continue;
      }
      const bool equal = *e.tilde == *cf;
      rep.add(subject, "closed form equals normalized group average", equal,
              Json{{"average", to_string(*e.tilde)}, {"closed_form", to_string(*cf)}});
      if (t != CodeType::I && *closed_form(t, ell, SumBound::Printed) != *e.tilde)
        printed_bound_mismatch.push_back(ell);
    }
    if (!printed_bound_mismatch.empty())
      rep.add("type " + std::string(type_name(t)) + " printed bound",
              "summation over 0<j<l (as printed) matches the average", Status::FLAGGED,
              Json{{"mismatching_weights", printed_bound_mismatch},
                   {"note", "the average carries a y^l term; the completed bound 0<j<=l is used"}});
  }
  return rep;
}

namespace detail {

inline RationalHomogPoly random_enumerator(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  std::uniform_int_distribution<int> coef(-6, 6);
  const int n = deg(rng);
  RationalHomogPoly f = RationalHomogPoly::monomial_x(n);
  for (int i = 1; i <= n; ++i) f.add_term(i, coef(rng));
  if (f.coeffs().size() < 2) f.add_term(n, 1);
  return f;
}

}  // namespace detail

// Linear, series and closed routes to the zeta polynomial.
inline CheckReport check_zeta_routes(const VerifyConfig& cfg) {
  CheckReport rep{"zeta polynomial: linear = series = closed form", {}};
  for (CodeType t : kAllTypes) {
    MatrixGroup g = builtin_group(t);
    const BigRational q = default_q(t);
    for (int ell = 1; ell <= cfg.ell_max; ++ell) {
      if (!is_valid_weight(t, ell)) continue;
      EisensteinPoly e = average(g, ell);
      const std::string subject = "type " + std::string(type_name(t)) + " l=" + std::to_string(ell);
      if (!e.tilde) {
        rep.add(subject, "nonvanishing weight", false);
        continue;
      }
      ZetaResult lin = zeta_linear(*e.tilde, q);
      ZetaResult ser = zeta_series(*e.tilde, q);
      bool ok = lin.P == ser.P && verify_lemma_identity(*e.tilde, q, lin.P) && lin.P.degree() <= lin.n - lin.d;
      Json w{{"linear", to_string(lin.P)}, {"series", to_string(ser.P)}, {"n_minus_d", lin.n - lin.d},
             {"degree", lin.P.degree()}};
      if (t != CodeType::II) {
        ZetaResult cl = closed_form_zeta(t, ell);
        w["closed"] = to_string(cl.P);
        ok = ok && cl.P == lin.P;
      }
      rep.add(subject, "three routes agree and the defining identity re-expands exactly", ok, w);
    }
  }
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> qpick(0, 3);
  const BigRational qs[] = {2, 3, 4, 5};
  for (int r = 0; r < cfg.random_enumerators; ++r) {
    RationalHomogPoly f = detail::random_enumerator(rng, cfg.random_max_degree);
    BigRational q = qs[qpick(rng)];
    ZetaResult lin = zeta_linear(f, q);
    ZetaResult ser = zeta_series(f, q);
    rep.add("random #" + std::to_string(r), "linear route equals series route",
            lin.P == ser.P && verify_lemma_identity(f, q, lin.P),
            Json{{"f", to_json(f)}, {"q", to_string(q)}, {"P", to_string(lin.P)}});
  }
  return rep;
}

inline std::optional<UniPoly> eisenstein_zeta(const MatrixGroup& g, CodeType t, int ell) {
  EisensteinPoly e = average(g, ell);
  if (!e.tilde) return std::nullopt;
  return zeta_linear(*e.tilde, default_q(t)).P;
}

// Riemann hypothesis analogue: roots on |T| = 1/sqrt(q).
inline CheckReport check_rha(const VerifyConfig& cfg) {
  CheckReport rep{"Riemann hypothesis analogue", {}};
  for (CodeType t : cfg.types) {
    MatrixGroup g = builtin_group(t);
    for (int ell = 1; ell <= cfg.ell_max; ++ell) {
      if (!is_valid_weight(t, ell)) continue;
      auto P = eisenstein_zeta(g, t, ell);
      const std::string subject = "type " + std::string(type_name(t)) + " l=" + std::to_string(ell);
      if (!P) {
        rep.add(subject, "nonvanishing weight", false);
        continue;
      }
      RootReport rr = rha_check(*P, default_q(t), cfg.tol);
      rep.add(subject, "all zeta roots have modulus 1/sqrt(q)", rr.passed,
              Json{{"degree", P->degree()}, {"target_radius", rr.target_radius},
                   {"max_radius_error", rr.max_radius_error}});
    }
  }
  return rep;
}

// Interlacing of consecutive nonvanishing weights.
inline CheckReport check_interlacing(const VerifyConfig& cfg) {
  CheckReport rep{"root interlacing", {}};
  for (CodeType t : cfg.types) {
    MatrixGroup g = builtin_group(t);
    const BigRational q = default_q(t);
    std::map<int, std::optional<UniPoly>> cache;
    auto zeta_at = [&](int ell) -> const std::optional<UniPoly>& {
      auto it = cache.find(ell);
      if (it == cache.end()) it = cache.emplace(ell, eisenstein_zeta(g, t, ell)).first;
      return it->second;
    };
    // Without an override, the nominal step is also reported when it differs
    // from the working one (Type III: 3 vs 4).
    std::vector<int> steps{cfg.step.value_or(interlace_step(t))};
    if (!cfg.step && nominal_step(t) != steps.front()) steps.push_back(nominal_step(t));
    for (int step : steps) {
      for (int ell = 1; ell <= cfg.interlace_ell_max; ++ell) {
        if (!is_valid_weight(t, ell)) continue;
        const std::string subject = "type " + std::string(type_name(t)) + " l=" + std::to_string(ell) +
                                    " vs l=" + std::to_string(ell + step);
        const auto& small = zeta_at(ell);
        const auto& large = zeta_at(ell + step);
        if (!small || !large) {
          rep.add(subject, "zeta roots at l interlace those at l+step", Status::FLAGGED,
                  Json{{"note", "vacuous: phi vanishes at l=" + std::to_string(small ? ell + step : ell)},
                       {"step", step}});
          continue;
        }
        InterlaceResult res = interlace_check(*small, *large, q, cfg.tol);
        rep.add(subject, "zeta roots at l interlace those at l+step", res.passed,
                Json{{"definition", kInterlaceDefinition}, {"reason", res.reason},
                     {"nominal_step", nominal_step(t)}, {"step", step}});
      }
    }
  }
  return rep;
}

inline CheckItem to_check_item(const SweepItem& s) {
  CheckItem it;
  it.subject = "type " + std::string(type_name(s.type)) + " p=" + std::to_string(s.p) + " l=" + std::to_string(s.ell) +
               " " + std::string(target_name(s.what));
  it.claim = "coefficients are p-integral";
  it.status = s.status;
  it.witness = s.report ? to_json(*s.report) : Json::object();
  if (!s.note.empty()) it.witness["note"] = s.note;
  return it;
}

// p-integrality at l = 2(p-1).
inline CheckReport check_integrality(const VerifyConfig& cfg) {
  CheckReport rep{"p-integrality at l = 2(p-1)", {}};
  for (const auto& s :
       integrality_sweep(cfg.types, cfg.primes, {SweepTarget::EIS, SweepTarget::ZETA, SweepTarget::THETA}, cfg.order))
    rep.items.push_back(to_check_item(s));
  return rep;
}

// Recorded behaviour at p = 3 and of the normalizer residues.
inline CheckReport check_discrepancies() {
  CheckReport rep{"documented discrepancies at p = 3", {}};
  for (CodeType t : {CodeType::I, CodeType::IV}) {
    LemmaModResult r = lemma_mod_check(t, 3);
    rep.add("type " + std::string(type_name(t)) + " p=3 residue", "normalizer is nonzero mod p",
            r.vanishes ? Status::FLAGGED : Status::PASS,
            Json{{"expression", r.expression}, {"value", r.value.get_str()}, {"residue", r.residue}});
  }
  for (const auto& s : integrality_sweep({CodeType::I, CodeType::IV}, {3}, {SweepTarget::ZETA}, 1))
    rep.items.push_back(to_check_item(s));

  // The printed proof line reduces 2 + 2^(p-1) to 2; Fermat gives 3.
  LemmaModResult r5 = lemma_mod_check(CodeType::I, 5);
  rep.add("type I p=5 residue value", "2 + 2^(p-1) is congruent to 2 mod p", Status::FLAGGED,
          Json{{"expression", r5.expression}, {"residue", r5.residue}, {"note", "residue is 3, still nonzero"}});

  for (CodeType t : {CodeType::I, CodeType::III, CodeType::IV}) {
    std::vector<std::uint64_t> vanishing;
    for (std::uint64_t p = 5; p <= 100; ++p)
      if (is_prime(p) && lemma_mod_check(t, p).vanishes) vanishing.push_back(p);
    rep.add("type " + std::string(type_name(t)) + " odd p<=100, p!=3", "normalizer is nonzero mod p",
            vanishing.empty(), Json{{"vanishing_primes", vanishing}});
  }
  return rep;
}

// Eisenstein series psi_{p-1} integrality and leading terms.
inline CheckReport check_eisenstein_series(const VerifyConfig& cfg) {
  CheckReport rep{"Eisenstein series q-expansions", {}};
  QExpansion psi4 = eisenstein_series(4, 3);
  const bool head = psi4.series.coefficient(0) == 1 && psi4.series.coefficient(1) == 240 &&
                    psi4.series.coefficient(2) == 2160;
  rep.add("psi_4 head", "psi_4 = 1 + 240q + 2160q^2 + ...", head, Json{{"series", to_json(psi4.series)}});
  for (auto p : cfg.primes) {
    if (p < 5) continue;
    QExpansion psi = eisenstein_series(static_cast<int>(p - 1), cfg.order);
    IntegralityReport ir = series_integrality(psi, p);
    rep.add("psi_" + std::to_string(p - 1) + " p=" + std::to_string(p), "coefficients are p-integral", ir.passed(),
            to_json(ir));
  }
  return rep;
}

/// Group orders derived once from the closure and frozen here.
inline std::size_t expected_group_order(CodeType t) {
  switch (t) {
    case CodeType::I: return 16;
    case CodeType::II: return 192;
    case CodeType::III: return 48;
    case CodeType::IV: return 12;
  }
  return 0;
}

inline CheckReport check_groups() {
  CheckReport rep{"builtin matrix groups", {}};
  for (CodeType t : kAllTypes) {
    MatrixGroup g = builtin_group(t);
    rep.add("G_" + std::string(type_name(t)), "closure order and group axioms",
            g.order() == expected_group_order(t) && check_group_axioms(g),
            Json{{"order", g.order()}, {"expected", expected_group_order(t)}});
  }
  return rep;
}

inline std::vector<CheckReport> run_all(const VerifyConfig& cfg) {
  return {check_published_eisenstein(), check_published_zeta(), check_closed_forms(cfg),
          check_zeta_routes(cfg),       check_rha(cfg),          check_interlacing(cfg),
          check_integrality(cfg),       check_discrepancies(),   check_eisenstein_series(cfg),
          check_groups()};
}

}  // namespace eiszeta

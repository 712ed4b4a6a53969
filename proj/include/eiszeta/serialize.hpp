#pragma once

// JSON forms of the exact objects. Rationals are always strings "num/den"
// (or "num"), so output is bit-exact and independent of float formatting.

#include <cmath>
#include <complex>
#include <string>

#include "eiszeta/cyclo.hpp"
#include "eiszeta/groups.hpp"
#include "eiszeta/padic.hpp"
#include "eiszeta/poly.hpp"
#include "eiszeta/report.hpp"
#include "eiszeta/series.hpp"
#include "eiszeta/zeta.hpp"

namespace eiszeta {

inline Json to_json(const BigRational& x) { return to_string(x); }

inline Json to_json(const CycloNumber& x) {
  Json coords = Json::array();
  for (const auto& c : x.coords()) coords.push_back(to_string(c));
  auto z = x.embed();
  return Json{{"coords", coords}, {"approx", Json::array({z.real(), z.imag()})}};
}

inline Json to_json(const RationalHomogPoly& f) {
  Json coeffs = Json::object();
  for (const auto& [i, a] : f.coeffs()) coeffs[std::to_string(i)] = to_string(a);
  return Json{{"n", f.degree()}, {"coeffs", coeffs}};
}

inline Json to_json(const CycloHomogPoly& f) {
  Json coeffs = Json::object();
  for (const auto& [i, a] : f.coeffs()) coeffs[std::to_string(i)] = to_json(a);
  return Json{{"n", f.degree()}, {"coeffs", coeffs}};
}

inline Json to_json(const UniPoly& p) {
  Json coeffs = Json::object();
  for (int k = 0; k <= p.degree(); ++k)
    if (!is_zero(p.coeffs()[k])) coeffs[std::to_string(k)] = to_string(p.coeffs()[k]);
  return Json{{"degree", p.degree()}, {"coeffs", coeffs}};
}

inline Json to_json(const TruncSeries& s) {
  Json coeffs = Json::object();
  for (int k = 0; k < s.order(); ++k)
    if (!is_zero(s.dense()[k])) coeffs[std::to_string(k)] = to_string(s.dense()[k]);
  return Json{{"D", s.denom()}, {"order", s.order()}, {"coeffs", coeffs}};
}

inline Json to_json(const Mat2& m) {
  return Json::array({Json::array({to_json(m.a), to_json(m.b)}), Json::array({to_json(m.c), to_json(m.d)})});
}

inline Json to_json(const MatrixGroup& g) {
  Json elements = Json::array();
  for (const auto& m : g.elements()) elements.push_back(to_json(m));
  Json gens = Json::array();
  for (const auto& m : g.generators()) gens.push_back(to_json(m));
  return Json{{"label", label_name(g.label())}, {"order", g.order()}, {"generators", gens}, {"elements", elements}};
}

inline Json to_json(const ZetaResult& z) {
  return Json{{"method", method_name(z.method)}, {"q", to_string(z.q)}, {"n", z.n}, {"d", z.d},
              {"P", to_json(z.P)}, {"text", to_string(z.P)}};
}

inline Json to_json(const RootReport& r) {
  Json roots = Json::array();
  for (const auto& z : r.roots)
    roots.push_back(Json{{"re", z.real()}, {"im", z.imag()}, {"radius", std::abs(z)}, {"arg", std::arg(z)}});
  return Json{{"target_radius", r.target_radius},
              {"max_radius_error", r.max_radius_error},
              {"passed", r.passed},
              {"roots", roots}};
}

inline Json to_json(const IntegralityReport& r) {
  Json off = Json::array();
  for (const auto& [i, v] : r.offending_terms) off.push_back(Json::array({i, v}));
  Json minv = r.min_valuation == kInfiniteValuation ? Json(nullptr) : Json(r.min_valuation);
  return Json{{"p", r.p}, {"target", r.target}, {"min_valuation", minv}, {"offending_terms", off},
              {"passed", r.passed()}};
}

inline Json to_json(const CheckReport& rep) {
  Json items = Json::array();
  for (const auto& it : rep.items)
    items.push_back(Json{{"subject", it.subject}, {"claim", it.claim}, {"status", status_name(it.status)},
                         {"witness", it.witness}});
  return Json{{"suite", rep.suite},
              {"summary",
               {{"pass", rep.count(Status::PASS)},
                {"fail", rep.count(Status::FAIL)},
                {"flagged", rep.count(Status::FLAGGED)}}},
              {"items", items}};
}

inline RationalHomogPoly homog_poly_from_json(const Json& j) {
  try {
    RationalHomogPoly f(j.at("n").get<int>());
    for (const auto& [key, value] : j.at("coeffs").items()) f.add_term(std::stoi(key), parse_rational(value.get<std::string>()));
    return f;
  } catch (const Json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("malformed polynomial JSON: ") + e.what());
  }
}

inline TruncSeries series_from_json(const Json& j) {
  try {
    TruncSeries s(j.at("D").get<int>(), j.at("order").get<int>());
    for (const auto& [key, value] : j.at("coeffs").items()) {
      int k = std::stoi(key);
      if (k >= s.order()) throw Error(Errc::OrderExceeded, "coefficient beyond stated order");
      s.set(k, parse_rational(value.get<std::string>()));
    }
    return s;
  } catch (const Json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("malformed series JSON: ") + e.what());
  }
}

}  // namespace eiszeta

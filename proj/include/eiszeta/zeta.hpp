#pragma once

// Duursma zeta polynomials of formal weight enumerators.
//
// For f = x^n + sum_{i>=d} A_i x^(n-i) y^i and q != 1, P_f(T) is the unique
// polynomial of degree <= n - d with
//
//   [T^(n-d)] P(T) / ((1-T)(1-qT)) * (xT + y(1-T))^n = (f - x^n) / (q - 1).
//
// Three independent routes are provided: solving that identity as a linear
// system, the normalized-weight-enumerator congruence
//
//   P(T) = N_f(T/(1-T)) (1-qT) / (1-T)^d   mod T^(n-d+1),
//
// and the closed forms for the Eisenstein polynomials of Types I, III, IV.

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "eiszeta/eisenstein.hpp"
#include "eiszeta/error.hpp"
#include "eiszeta/poly.hpp"
#include "eiszeta/rational.hpp"
#include "eiszeta/roots.hpp"
#include "eiszeta/series.hpp"

namespace eiszeta {

enum class ZetaMethod { LINEAR, SERIES, CLOSED };

inline std::string_view method_name(ZetaMethod m) {
  switch (m) {
    case ZetaMethod::LINEAR: return "linear";
    case ZetaMethod::SERIES: return "series";
    case ZetaMethod::CLOSED: return "closed";
  }
  return "?";
}

struct ZetaResult {
  UniPoly P;
  BigRational q;
  int n = 0;
  int d = 0;
  ZetaMethod method = ZetaMethod::LINEAR;
};

/// The Duursma parameter bound to each type: q_I = q_II = 2, q_III = 3, q_IV = 4.
inline BigRational default_q(CodeType t) {
  switch (t) {
    case CodeType::I:
    case CodeType::II: return 2;
    case CodeType::III: return 3;
    case CodeType::IV: return 4;
  }
  return 2;
}

/// The weight step w_X attached to each type (2, 8, 3, 2).
inline int nominal_step(CodeType t) {
  switch (t) {
    case CodeType::I: return 2;
    case CodeType::II: return 8;
    case CodeType::III: return 3;
    case CodeType::IV: return 2;
  }
  return 2;
}

/// Smallest step between consecutive nonvanishing weights. Differs from
/// nominal_step only for Type III (phi_{l+3} = 0 whenever phi_l != 0).
inline int interlace_step(CodeType t) { return t == CodeType::III ? 4 : nominal_step(t); }

namespace detail {

inline void require_formal_enumerator(const RationalHomogPoly& f, const BigRational& q) {
  if (f.coeff(0) != 1) throw Error(Errc::NotFormalEnumerator, "x^n coefficient must be 1");
  if (q == 1) throw Error(Errc::InvalidArgument, "q must differ from 1");
  if (f.coeffs().size() < 2) throw Error(Errc::DegenerateEnumerator, "f = x^n has no minimum distance");
}

// Coefficients of 1/((1-T)(1-qT)) up to T^(len-1): g_k = 1 + q + ... + q^k.
inline std::vector<BigRational> duursma_kernel(const BigRational& q, int len) {
  std::vector<BigRational> g(len);
  BigRational power = 1, acc = 0;
  for (int k = 0; k < len; ++k) {
    acc += power;
    g[k] = acc;
    power *= q;
  }
  return g;
}

}  // namespace detail

/// N_f(t) = 1/(q-1) sum_{i=d}^n A_i / C(n,i) t^(i-d), as a series of order n-d+1.
inline TruncSeries normalized_weight_enumerator(const RationalHomogPoly& f, const BigRational& q) {
  detail::require_formal_enumerator(f, q);
  const int n = f.degree();
  const int d = min_distance(f);
  TruncSeries s(1, n - d + 1);
  BigRational inv_q1 = 1 / (q - 1);
  for (const auto& [i, a] : f.coeffs()) {
    if (i < d) continue;
    s.set(i - d, a / BigRational(binomial(n, i)) * inv_q1);
  }
  return s;
}

/// Route 1: solve the defining identity as an exact (n+1) x (n-d+1) system.
inline ZetaResult zeta_linear(const RationalHomogPoly& f, const BigRational& q) {
  detail::require_formal_enumerator(f, q);
  const int n = f.degree();
  const int d = min_distance(f);
  const int r = n - d;
  const int cols = r + 1;

  // The x^(n-i) y^i coefficient of (xT + y(1-T))^n is C(n,i) T^(n-i) (1-T)^i,
  // so row i, column k is C(n,i) [T^(r-k-(n-i))] G(T) (1-T)^i with G the
  // Duursma kernel.
  const auto g = detail::duursma_kernel(q, cols);
  std::vector<std::vector<BigRational>> m(n + 1, std::vector<BigRational>(cols + 1));
  for (int i = 0; i <= n; ++i) {
    // h = G (1-T)^i truncated to `cols` terms.
    std::vector<BigRational> h(g.begin(), g.end());
    for (int rep = 0; rep < i; ++rep)
      for (int k = cols - 1; k >= 1; --k) h[k] -= h[k - 1];
    BigRational binom(binomial(n, i));
    for (int k = 0; k < cols; ++k) {
      int e = r - k - (n - i);
      if (e >= 0) m[i][k] = binom * h[e];
    }
    BigRational rhs = f.coeff(i);
    if (i == 0) rhs -= 1;
    m[i][cols] = rhs / (q - 1);
  }

  // Gauss-Jordan elimination.
  int row = 0;
  for (int col = 0; col < cols; ++col) {
    int piv = row;
    while (piv <= n && is_zero(m[piv][col])) ++piv;
    if (piv > n) throw Error(Errc::SingularSystem, "zeta system has no unique solution");
    std::swap(m[piv], m[row]);
    BigRational s = 1 / m[row][col];
    for (int j = col; j <= cols; ++j) m[row][j] *= s;
    for (int i = 0; i <= n; ++i) {
      if (i == row || is_zero(m[i][col])) continue;
      BigRational factor = m[i][col];
      for (int j = col; j <= cols; ++j) m[i][j] -= factor * m[row][j];
    }
    ++row;
  }
  for (int i = row; i <= n; ++i)
    if (!is_zero(m[i][cols])) throw Error(Errc::SingularSystem, "zeta system is inconsistent");

  std::vector<BigRational> p(cols);
  for (int k = 0; k < cols; ++k) p[k] = m[k][cols];
  return {UniPoly(std::move(p)), q, n, d, ZetaMethod::LINEAR};
}

/// Route 2: P = N_f(T/(1-T)) (1-qT) / (1-T)^d  mod T^(n-d+1).
inline ZetaResult zeta_series(const RationalHomogPoly& f, const BigRational& q) {
  TruncSeries nwe = normalized_weight_enumerator(f, q);
  const int n = f.degree();
  const int d = min_distance(f);
  const int order = n - d + 1;

  TruncSeries composed = series_compose_T_over_1mT(nwe);
  TruncSeries one_minus_qT = TruncSeries::from_poly(UniPoly({1, -q}), order);
  TruncSeries one_minus_T = TruncSeries::from_poly(UniPoly({1, -1}), order);
  TruncSeries result = composed * one_minus_qT * series_pow(one_minus_T, -d);
  if (result.top_exponent() > n - d)
    throw Error(Errc::TruncationLeak, "series route produced a term beyond T^(n-d)");
  return {UniPoly(result.dense()), q, n, d, ZetaMethod::SERIES};
}

/// Route 3: closed forms for the Eisenstein polynomials of Types I, III, IV.
inline ZetaResult closed_form_zeta(CodeType t, int ell) {
  if (t == CodeType::II) throw Error(Errc::InvalidArgument, "no closed zeta form is provided for Type II");
  if (!is_valid_weight(t, ell))
    throw Error(Errc::InvalidWeight, "Eisenstein polynomial of type " + std::string(type_name(t)) +
                                         " vanishes at weight " + std::to_string(ell));
  std::vector<BigRational> p;
  int d = 0;
  switch (t) {
    case CodeType::I: {
      // (2 + 2^(l/2) T^(l-2)) / (2 + 2^(l/2))
      BigInt s = ipow(2, ell / 2);
      BigRational den(2 + s);
      p.assign(ell - 1, BigRational(0));
      p[0] += BigRational(2) / den;
      p[ell - 2] += BigRational(s) / den;
      d = 2;
      break;
    }
    case CodeType::III: {
      // 12 / (3 + 3^(l/2)) sum_{j=0}^{(l-4)/2} (-3)^j T^(2j)
      BigRational c = make_rational(12, 3 + ipow(3, ell / 2));
      p.assign(ell - 3, BigRational(0));
      for (int j = 0; j <= (ell - 4) / 2; ++j) p[2 * j] = c * BigRational(ipow(-3, j));
      d = 3;
      break;
    }
    case CodeType::IV: {
      // 6 / (2 + 2^l) sum_{j=0}^{l-2} (-2)^j T^j
      BigRational c = make_rational(6, 2 + ipow(2, ell));
      p.assign(ell - 1, BigRational(0));
      for (int j = 0; j <= ell - 2; ++j) p[j] = c * BigRational(ipow(-2, j));
      d = 2;
      break;
    }
    case CodeType::II: break;
  }
  return {UniPoly(std::move(p)), default_q(t), ell, d, ZetaMethod::CLOSED};
}

/// Re-expands the defining identity with P substituted and compares it with
/// (f - x^n)/(q - 1) coefficient by coefficient.
inline bool verify_lemma_identity(const RationalHomogPoly& f, const BigRational& q, const UniPoly& P) {
  const int n = f.degree();
  const int d = min_distance(f);
  const int order = n - d + 1;
  TruncSeries base = TruncSeries::from_poly(P, order) *
                     series_inverse(TruncSeries::from_poly(UniPoly({1, -1}) * UniPoly({1, -q}), order));
  TruncSeries one_minus_T = TruncSeries::from_poly(UniPoly({1, -1}), order);
  TruncSeries power_of_one_minus_T = TruncSeries::constant(1, order);
  for (int i = 0; i <= n; ++i) {
    // [T^(n-d)] of base * C(n,i) T^(n-i) (1-T)^i
    BigRational lhs = 0;
    int shift = n - i;
    if (shift <= n - d) {
      TruncSeries prod = base * power_of_one_minus_T;
      lhs = prod.coefficient(n - d - shift) * BigRational(binomial(n, i));
    }
    BigRational rhs = f.coeff(i);
    if (i == 0) rhs -= 1;
    rhs /= (q - 1);
    if (lhs != rhs) return false;
    power_of_one_minus_T = power_of_one_minus_T * one_minus_T;
  }
  return true;
}

struct RootReport {
  std::vector<std::complex<double>> roots;
  std::vector<double> radii;
  double target_radius = 0.0;
  double max_radius_error = 0.0;
  bool passed = true;
};

/// All roots of P must have modulus 1/sqrt(q) within tol.
inline RootReport rha_check(const UniPoly& P, const BigRational& q, double tol) {
  if (!(tol > 0.0)) throw Error(Errc::InvalidArgument, "tolerance must be positive");
  if (P.is_zero()) throw Error(Errc::InvalidArgument, "zero polynomial has no root set");
  if (sgn(q) <= 0) throw Error(Errc::InvalidArgument, "q must be positive for the critical circle");
  RootReport rep;
  rep.target_radius = 1.0 / std::sqrt(q.get_d());
  rep.roots = find_roots(P, rep.target_radius);
  for (const auto& z : rep.roots) {
    double r = std::abs(z);
    rep.radii.push_back(r);
    rep.max_radius_error = std::max(rep.max_radius_error, std::abs(r - rep.target_radius));
  }
  rep.passed = rep.max_radius_error < tol;
  return rep;
}

inline constexpr const char* kInterlaceDefinition =
    "roots of both polynomials lie on |T| = 1/sqrt(q); no two roots coincide within tol; "
    "each open arc between angularly adjacent roots of the higher-weight polynomial "
    "contains at most one root of the lower-weight polynomial, and every lower-weight "
    "root lies strictly inside such an arc";

struct InterlaceResult {
  bool passed = false;
  std::string reason;
  std::vector<double> small_args;  // principal arguments, sorted
  std::vector<double> large_args;
};

/// Arc-containment interlacing of the roots of P_small within those of P_large.
inline InterlaceResult interlace_check(const UniPoly& P_small, const UniPoly& P_large, const BigRational& q,
                                       double tol) {
  RootReport small = rha_check(P_small, q, tol);
  RootReport large = rha_check(P_large, q, tol);
  if (!small.passed || !large.passed)
    throw Error(Errc::NotOnCircle, "interlacing requires both root sets on the critical circle");

  InterlaceResult res;
  for (const auto& z : small.roots) res.small_args.push_back(std::arg(z));
  for (const auto& z : large.roots) res.large_args.push_back(std::arg(z));
  std::sort(res.small_args.begin(), res.small_args.end());
  std::sort(res.large_args.begin(), res.large_args.end());

  for (const auto& s : small.roots)
    for (const auto& l : large.roots)
      if (std::abs(s - l) < tol) {
        res.reason = "coincident roots at argument " + std::to_string(std::arg(s)) +
                     "; exact common factor " + to_string(poly_gcd(P_small, P_large));
        return res;
      }

  if (res.small_args.empty()) {
    res.passed = true;
    res.reason = "vacuous: lower-weight polynomial has no roots";
    return res;
  }
  if (res.large_args.empty()) {
    res.reason = "higher-weight polynomial has no roots, so there are no arcs";
    return res;
  }

  // Arc k runs from large_args[k] to the next root counter-clockwise; the last
  // arc wraps through the branch cut.
  const std::size_t arcs = res.large_args.size();
  std::vector<int> count(arcs, 0);
  for (double a : res.small_args) {
    std::size_t k = std::upper_bound(res.large_args.begin(), res.large_args.end(), a) - res.large_args.begin();
    std::size_t arc = k == 0 ? arcs - 1 : k - 1;
    if (++count[arc] > 1) {
      res.reason = "arc starting at argument " + std::to_string(res.large_args[arc]) +
                   " contains more than one lower-weight root";
      return res;
    }
  }
  res.passed = true;
  res.reason = "interlaced";
  return res;
}

}  // namespace eiszeta

#pragma once

// Eisenstein polynomials phi_l = (1/|G|) sum_{sigma in G} (sigma x)^l, where
// sigma x = a x + b y is the first row of sigma acting on (x, y), and the
// normalized form obtained by dividing by the x^l coefficient.

#include <optional>
#include <set>
#include <vector>

#include "eiszeta/error.hpp"
#include "eiszeta/groups.hpp"
#include "eiszeta/poly.hpp"
#include "eiszeta/rational.hpp"

namespace eiszeta {

struct EisensteinPoly {
  GroupLabel label;
  int ell;
  CycloHomogPoly raw;
  std::optional<RationalHomogPoly> tilde;  // absent when raw == 0
};

namespace detail {

struct WeightedRow {
  CycloNumber a, b;
  long multiplicity;
};

// sigma x depends only on the first row, so distinct rows are averaged once.
inline std::vector<WeightedRow> distinct_rows(const MatrixGroup& g) {
  std::vector<WeightedRow> rows;
  std::set<Mat2, Mat2Less> seen;  // keyed on (a, b, 0, 0)
  for (const auto& m : g.elements()) {
    Mat2 key{m.a, m.b, 0, 0};
    if (seen.insert(key).second) rows.push_back({m.a, m.b, 0});
  }
  for (auto& r : rows) {
    for (const auto& m : g.elements())
      if (m.a == r.a && m.b == r.b) ++r.multiplicity;
  }
  return rows;
}

}  // namespace detail

/// Exact group average. raw == 0 is reported by an absent tilde.
inline EisensteinPoly average(const MatrixGroup& g, int ell) {
  if (ell < 0) throw Error(Errc::InvalidArgument, "weight must be nonnegative");
  CycloHomogPoly sum(ell);
  for (const auto& row : detail::distinct_rows(g)) {
    CycloHomogPoly term = expand_linear_power(row.a, row.b, ell);
    term.scale(BigRational(row.multiplicity));
    sum += term;
  }
  sum.scale(BigRational(1, static_cast<unsigned long>(g.order())));

  EisensteinPoly out{g.label(), ell, sum, std::nullopt};
  CycloNumber lead = sum.coeff(0);
  if (!sum.is_zero() && !lead.is_zero()) {
    CycloHomogPoly normalized = sum;
    normalized.scale(inv(lead));
    out.tilde = to_rational(normalized);
  }
  return out;
}

/// Which printed summation bound to use for the Type III/IV closed forms.
/// Completed includes the j = l term; Printed stops at j < l.
enum class SumBound { Completed, Printed };

/// Whether phi_l for the given type is nonzero (by the closed-form case split
/// for I/III/IV; Type II is nonzero exactly for l = 0 mod 8).
inline bool is_valid_weight(CodeType t, int ell) {
  if (ell < 1) return false;
  switch (t) {
    case CodeType::I:
    case CodeType::IV: return ell % 2 == 0;
    case CodeType::II: return ell % 8 == 0;
    case CodeType::III: return ell % 4 == 0;
  }
  return false;
}

/// Closed forms of the normalized Eisenstein polynomials for Types I, III, IV.
/// Returns nullopt where the polynomial vanishes.
inline std::optional<RationalHomogPoly> closed_form(CodeType t, int ell, SumBound bound = SumBound::Completed) {
  if (ell < 0) throw Error(Errc::InvalidArgument, "weight must be nonnegative");
  if (t == CodeType::II) throw Error(Errc::InvalidArgument, "no closed form is provided for Type II");
  if (ell == 0) return RationalHomogPoly(0, {{0, BigRational(1)}});
  if (!is_valid_weight(t, ell)) return std::nullopt;

  RationalHomogPoly f = RationalHomogPoly::monomial_x(ell);
  const bool include_top = bound == SumBound::Completed;
  switch (t) {
    case CodeType::I: {
      // x^l + y^l + 2/(2 + 2^(l/2)) sum_{0<j<l, j even} C(l,j) x^(l-j) y^j
      BigRational c = make_rational(2, 2 + ipow(2, ell / 2));
      f.add_term(ell, 1);
      for (int j = 2; j < ell; j += 2) f.add_term(j, c * BigRational(binomial(ell, j)));
      break;
    }
    case CodeType::III: {
      // x^l + 3/(3 + 3^(l/2)) sum_{0<j<=l, 3|j} 2^j C(l,j) x^(l-j) y^j
      BigRational c = make_rational(3, 3 + ipow(3, ell / 2));
      for (int j = 3; j < ell || (include_top && j == ell); j += 3)
        f.add_term(j, c * BigRational(ipow(2, j) * binomial(ell, j)));
      break;
    }
    case CodeType::IV: {
      // x^l + 2/(2 + 2^l) sum_{0<j<=l, j even} 3^j C(l,j) x^(l-j) y^j
      BigRational c = make_rational(2, 2 + ipow(2, ell));
      for (int j = 2; j < ell || (include_top && j == ell); j += 2)
        f.add_term(j, c * BigRational(ipow(3, j) * binomial(ell, j)));
      break;
    }
    case CodeType::II: break;
  }
  return f;
}

/// Smallest i > 0 with A_i != 0.
template <typename K>
int min_distance(const HomogPoly<K>& f) {
  for (const auto& [i, a] : f.coeffs())
    if (i > 0) return i;
  throw Error(Errc::NoMinimumDistance, "polynomial has no term beyond x^n");
}

}  // namespace eiszeta

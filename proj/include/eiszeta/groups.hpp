#pragma once

// The four self-dual-code groups G_I..G_IV as explicit finite sets of 2x2
// matrices over Q(z24), and their action on homogeneous polynomials.

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "eiszeta/cyclo.hpp"
#include "eiszeta/error.hpp"
#include "eiszeta/poly.hpp"

namespace eiszeta {

enum class CodeType { I, II, III, IV };

inline constexpr CodeType kAllTypes[] = {CodeType::I, CodeType::II, CodeType::III, CodeType::IV};

inline std::string_view type_name(CodeType t) {
  switch (t) {
    case CodeType::I: return "I";
    case CodeType::II: return "II";
    case CodeType::III: return "III";
    case CodeType::IV: return "IV";
  }
  return "?";
}

inline CodeType parse_type(std::string_view s) {
  if (s == "I") return CodeType::I;
  if (s == "II") return CodeType::II;
  if (s == "III") return CodeType::III;
  if (s == "IV") return CodeType::IV;
  throw Error(Errc::InvalidArgument, "unknown code type '" + std::string(s) + "' (expected I, II, III or IV)");
}

/// Row-major 2x2 matrix (a b; c d).
struct Mat2 {
  CycloNumber a, b, c, d;

  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 diag(const CycloNumber& p, const CycloNumber& q) { return {p, 0, 0, q}; }

  CycloNumber det() const { return a * d - b * c; }

  Mat2 inverse() const {
    CycloNumber dt = det();
    if (dt.is_zero()) throw Error(Errc::SingularGenerator, "matrix is not invertible");
    CycloNumber s = inv(dt);
    return {d * s, -b * s, -c * s, a * s};
  }

  Mat2 scaled(const CycloNumber& s) const { return {a * s, b * s, c * s, d * s}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

/// Canonical order: lexicographic over (a, b, c, d) coordinates.
struct Mat2Less {
  bool operator()(const Mat2& x, const Mat2& y) const {
    if (int s = compare(x.a, y.a)) return s < 0;
    if (int s = compare(x.b, y.b)) return s < 0;
    if (int s = compare(x.c, y.c)) return s < 0;
    return compare(x.d, y.d) < 0;
  }
};

enum class GroupLabel { I, II, III, IV, CUSTOM };

inline std::string_view label_name(GroupLabel g) {
  switch (g) {
    case GroupLabel::I: return "I";
    case GroupLabel::II: return "II";
    case GroupLabel::III: return "III";
    case GroupLabel::IV: return "IV";
    case GroupLabel::CUSTOM: return "CUSTOM";
  }
  return "?";
}

inline GroupLabel to_label(CodeType t) {
  switch (t) {
    case CodeType::I: return GroupLabel::I;
    case CodeType::II: return GroupLabel::II;
    case CodeType::III: return GroupLabel::III;
    case CodeType::IV: return GroupLabel::IV;
  }
  return GroupLabel::CUSTOM;
}

class MatrixGroup {
 public:
  MatrixGroup(GroupLabel label, std::vector<Mat2> generators, std::vector<Mat2> elements)
      : label_(label), generators_(std::move(generators)), elements_(std::move(elements)) {}

  GroupLabel label() const { return label_; }
  const std::vector<Mat2>& generators() const { return generators_; }
  const std::vector<Mat2>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  bool contains(const Mat2& m) const {
    return std::binary_search(elements_.begin(), elements_.end(), m, Mat2Less{});
  }

 private:
  GroupLabel label_;
  std::vector<Mat2> generators_;
  std::vector<Mat2> elements_;  // sorted by Mat2Less
};

inline constexpr std::size_t kDefaultClosureCap = 10000;

/// Breadth-first closure of the generators under right multiplication.
/// For a finite set of invertible matrices this is the generated group.
inline MatrixGroup generate_closure(const std::vector<Mat2>& gens, std::size_t cap = kDefaultClosureCap,
                                    GroupLabel label = GroupLabel::CUSTOM) {
  if (cap < 1) throw Error(Errc::InvalidArgument, "closure cap must be positive");
  for (const auto& g : gens)
    if (g.det().is_zero()) throw Error(Errc::SingularGenerator, "generator is not invertible");

  std::set<Mat2, Mat2Less> seen{Mat2::identity()};
  std::deque<Mat2> frontier{Mat2::identity()};
  while (!frontier.empty()) {
    Mat2 cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      Mat2 next = cur * g;
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw Error(Errc::CapExceeded, "closure exceeded " + std::to_string(cap) + " elements");
        frontier.push_back(std::move(next));
      }
    }
  }
  return MatrixGroup(label, gens, std::vector<Mat2>(seen.begin(), seen.end()));
}

/// The two generators printed for each type.
inline std::vector<Mat2> builtin_generators(CodeType t) {
  const CycloNumber sqrt2 = cyclo_symbol(CycloSymbol::SQRT2);
  const CycloNumber sqrt3 = cyclo_symbol(CycloSymbol::SQRT3);
  const CycloNumber half_sqrt2 = sqrt2 * BigRational(1, 2);   // 1/sqrt2
  const CycloNumber third_sqrt3 = sqrt3 * BigRational(1, 3);  // 1/sqrt3
  const Mat2 hadamard{half_sqrt2, half_sqrt2, half_sqrt2, -half_sqrt2};
  switch (t) {
    case CodeType::I:
      return {hadamard, Mat2::diag(1, -1)};
    case CodeType::II:
      return {hadamard, Mat2::diag(1, cyclo_symbol(CycloSymbol::I))};
    case CodeType::III:
      return {Mat2{third_sqrt3, third_sqrt3 * BigRational(2), third_sqrt3, -third_sqrt3},
              Mat2::diag(1, cyclo_symbol(CycloSymbol::ZETA3))};
    case CodeType::IV:
      return {Mat2{BigRational(1, 2), BigRational(3, 2), BigRational(1, 2), BigRational(-1, 2)},
              Mat2::diag(1, -1)};
  }
  throw Error(Errc::InvalidArgument, "unknown code type");
}

inline MatrixGroup builtin_group(CodeType t) {
  return generate_closure(builtin_generators(t), kDefaultClosureCap, to_label(t));
}

/// Exhaustive check: identity present, closed under products and inverses.
inline bool check_group_axioms(const MatrixGroup& g) {
  if (!g.contains(Mat2::identity())) return false;
  for (const auto& x : g.elements()) {
    if (!g.contains(x.inverse())) return false;
    for (const auto& y : g.elements())
      if (!g.contains(x * y)) return false;
  }
  return true;
}

/// f(sigma (x, y)): substitute x -> a x + b y, y -> c x + d y.
template <typename K>
CycloHomogPoly act_on_poly(const Mat2& s, const HomogPoly<K>& f) {
  const int n = f.degree();
  if (f.is_zero()) return CycloHomogPoly(n);
  HomogPoly<CycloNumber> result(n);
  std::vector<HomogPoly<CycloNumber>> xpow, ypow;
  xpow.reserve(n + 1);
  ypow.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    xpow.push_back(expand_linear_power(s.a, s.b, k));
    ypow.push_back(expand_linear_power(s.c, s.d, k));
  }
  for (const auto& [i, coef] : f.coeffs()) {
    HomogPoly<CycloNumber> term = xpow[n - i] * ypow[i];
    term.scale(CycloNumber(coef));
    result += term;
  }
  return result;
}

}  // namespace eiszeta

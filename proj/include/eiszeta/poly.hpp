#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eiszeta/cyclo.hpp"
#include "eiszeta/error.hpp"
#include "eiszeta/rational.hpp"

namespace eiszeta {

inline bool is_zero(const CycloNumber& x) { return x.is_zero(); }

/// Homogeneous bivariate polynomial sum_i A_i x^(n-i) y^i over a coefficient
/// field K (BigRational or CycloNumber). Zero coefficients are never stored.
template <typename K>
class HomogPoly {
 public:
  using Coeffs = std::map<int, K>;

  HomogPoly() = default;
  explicit HomogPoly(int degree) : n_(degree) {
    if (degree < 0) throw Error(Errc::InvalidArgument, "negative degree");
  }
  HomogPoly(int degree, const std::vector<std::pair<int, K>>& terms) : HomogPoly(degree) {
    for (const auto& [i, a] : terms) add_term(i, a);
  }

  /// x^n.
  static HomogPoly monomial_x(int degree) { return HomogPoly(degree, {{0, K(1)}}); }

  int degree() const { return n_; }
  const Coeffs& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  /// Coefficient of x^(n-i) y^i.
  K coeff(int i) const {
    auto it = c_.find(i);
    return it == c_.end() ? K(0) : it->second;
  }

  void add_term(int i, const K& a) {
    if (i < 0 || i > n_) throw Error(Errc::InvalidArgument, "term y-exponent outside [0, n]");
    if (eiszeta::is_zero(a)) return;
    auto [it, inserted] = c_.try_emplace(i, a);
    if (!inserted) {
      it->second += a;
      if (eiszeta::is_zero(it->second)) c_.erase(it);
    }
  }

  HomogPoly& operator+=(const HomogPoly& o) {
    require_same_degree(o);
    for (const auto& [i, a] : o.c_) add_term(i, a);
    return *this;
  }
  HomogPoly& operator-=(const HomogPoly& o) {
    require_same_degree(o);
    for (const auto& [i, a] : o.c_) add_term(i, -a);
    return *this;
  }
  template <typename S>
  HomogPoly& scale(const S& s) {
    if (eiszeta::is_zero(K(s))) {
      c_.clear();
      return *this;
    }
    for (auto& [i, a] : c_) a *= s;
    return *this;
  }

  friend HomogPoly operator+(HomogPoly a, const HomogPoly& b) { return a += b; }
  friend HomogPoly operator-(HomogPoly a, const HomogPoly& b) { return a -= b; }

  friend HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
    HomogPoly r(a.n_ + b.n_);
    for (const auto& [i, x] : a.c_)
      for (const auto& [j, y] : b.c_) r.add_term(i + j, x * y);
    return r;
  }

  friend bool operator==(const HomogPoly& a, const HomogPoly& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

 private:
  void require_same_degree(const HomogPoly& o) const {
    if (o.n_ != n_) throw Error(Errc::InvalidArgument, "degree mismatch in homogeneous sum");
  }

  int n_ = 0;
  Coeffs c_;
};

using RationalHomogPoly = HomogPoly<BigRational>;
using CycloHomogPoly = HomogPoly<CycloNumber>;

/// Checked narrowing CycloNumber -> BigRational; throws NotRational.
inline RationalHomogPoly to_rational(const CycloHomogPoly& f) {
  RationalHomogPoly r(f.degree());
  for (const auto& [i, a] : f.coeffs()) r.add_term(i, a.to_rational());
  return r;
}

inline CycloHomogPoly to_cyclo(const RationalHomogPoly& f) {
  CycloHomogPoly r(f.degree());
  for (const auto& [i, a] : f.coeffs()) r.add_term(i, CycloNumber(a));
  return r;
}

/// (a x + b y)^l by the binomial theorem.
template <typename K>
HomogPoly<K> expand_linear_power(const K& a, const K& b, int ell) {
  HomogPoly<K> r(ell);
  std::vector<K> apow(ell + 1), bpow(ell + 1);
  apow[0] = K(1);
  bpow[0] = K(1);
  for (int k = 1; k <= ell; ++k) {
    apow[k] = apow[k - 1] * a;
    bpow[k] = bpow[k - 1] * b;
  }
  for (int j = 0; j <= ell; ++j) {
    if (eiszeta::is_zero(bpow[j]) || eiszeta::is_zero(apow[ell - j])) continue;
    K term = apow[ell - j] * bpow[j];
    term *= BigRational(binomial(ell, j));
    r.add_term(j, term);
  }
  return r;
}

/// Renders "x^8+14x^4y^4+y^8"; non-integer coefficients are parenthesised.
inline std::string to_string(const RationalHomogPoly& f) {
  if (f.is_zero()) return "0";
  const int n = f.degree();
  std::string out;
  for (const auto& [i, a] : f.coeffs()) {
    std::string mono;
    if (n - i == 1) mono += "x";
    else if (n - i > 1) mono += "x^" + std::to_string(n - i);
    if (i == 1) mono += "y";
    else if (i > 1) mono += "y^" + std::to_string(i);

    bool negative = sgn(a) < 0;
    BigRational mag = abs(a);
    std::string coef;
    if (mag != 1 || mono.empty()) {
      coef = mag.get_den() == 1 ? to_string(mag) : "(" + to_string(mag) + ")";
    }
    if (negative) out += "-";
    else if (!out.empty()) out += "+";
    out += coef + mono;
  }
  return out;
}

inline std::string to_latex(const RationalHomogPoly& f) {
  if (f.is_zero()) return "0";
  const int n = f.degree();
  std::string out;
  for (const auto& [i, a] : f.coeffs()) {
    std::string mono;
    if (n - i == 1) mono += "x";
    else if (n - i > 1) mono += "x^{" + std::to_string(n - i) + "}";
    if (i == 1) mono += (mono.empty() ? "y" : " y");
    else if (i > 1) mono += (mono.empty() ? "" : " ") + std::string("y^{") + std::to_string(i) + "}";

    BigRational mag = abs(a);
    std::string coef;
    if (mag != 1 || mono.empty()) {
      coef = mag.get_den() == 1 ? to_string(mag)
                                : "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
      if (!mono.empty()) coef += " ";
    }
    if (sgn(a) < 0) out += "-";
    else if (!out.empty()) out += "+";
    out += coef + mono;
  }
  return out;
}

/// Dense univariate polynomial in T with exact rational coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigRational>& coeffs() const { return c_; }

  BigRational coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : BigRational(0);
  }

  std::complex<double> eval(std::complex<double> t) const {
    std::complex<double> acc{0.0, 0.0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->get_d();
    return acc;
  }

  UniPoly& operator*=(const BigRational& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<BigRational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
    return UniPoly(std::move(r));
  }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && eiszeta::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<BigRational> c_;
};

/// Remainder of a divided by b (b nonzero).
inline UniPoly poly_rem(const UniPoly& a, const UniPoly& b) {
  std::vector<BigRational> r = a.coeffs();
  const int db = b.degree();
  const BigRational& lead = b.coeffs().back();
  for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
    if (is_zero(r[k])) continue;
    BigRational f = r[k] / lead;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeffs()[j];
  }
  if (static_cast<int>(r.size()) > db) r.resize(std::max(db, 0));
  return UniPoly(std::move(r));
}

/// Monic gcd over Q; zero only when both inputs are zero.
inline UniPoly poly_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a *= BigRational(1) / a.coeffs().back();
  return a;
}

/// Renders in the "1/5+2T/5+2T^2/5" style.
inline std::string to_string(const UniPoly& p, const std::string& var = "T") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    const BigRational& a = p.coeffs()[k];
    if (is_zero(a)) continue;
    if (sgn(a) < 0) out += "-";
    else if (!out.empty()) out += "+";
    BigRational mag = abs(a);
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (k == 0 || mag.get_num() != 1) out += mag.get_num().get_str();
    out += mono;
    if (mag.get_den() != 1) out += "/" + mag.get_den().get_str();
  }
  return out;
}

inline std::string to_latex(const UniPoly& p, const std::string& var = "T") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    const BigRational& a = p.coeffs()[k];
    if (is_zero(a)) continue;
    if (sgn(a) < 0) out += "-";
    else if (!out.empty()) out += "+";
    BigRational mag = abs(a);
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^{" + std::to_string(k) + "}");
    std::string num = (k == 0 || mag.get_num() != 1) ? mag.get_num().get_str() + (mono.empty() ? "" : " ") : "";
    if (mag.get_den() == 1) out += num + mono;
    else out += "\\frac{" + num + mono + "}{" + mag.get_den().get_str() + "}";
  }
  return out;
}

}  // namespace eiszeta

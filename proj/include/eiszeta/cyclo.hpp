#pragma once

// Exact arithmetic in the cyclotomic field Q(z), z = exp(2*pi*i/24).
//
// Elements are stored over the power basis 1, z, ..., z^7. The minimal
// polynomial is Phi_24(x) = x^8 - x^4 + 1, so products are reduced with
// z^8 = z^4 - 1. This field contains every matrix entry of the four
// self-dual-code groups: sqrt2 = z^3 + z^21, sqrt3 = z^2 + z^22, i = z^6,
// exp(2*pi*i/3) = z^8.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <string_view>

#include "eiszeta/error.hpp"
#include "eiszeta/rational.hpp"

namespace eiszeta {

using ComplexApprox = std::complex<double>;

class CycloNumber {
 public:
  static constexpr int kOrder = 24;
  static constexpr int kDegree = 8;
  using Coords = std::array<BigRational, kDegree>;

  CycloNumber() = default;
  CycloNumber(long v) { c_[0] = v; }  // NOLINT(google-explicit-constructor)
  CycloNumber(const BigRational& v) { c_[0] = v; }  // NOLINT(google-explicit-constructor)
  explicit CycloNumber(Coords c) : c_(std::move(c)) {}

  /// z^k for any integer k.
  static CycloNumber zeta_power(long k) {
    k %= kOrder;
    if (k < 0) k += kOrder;
    CycloNumber r(1);
    for (long j = 0; j < k; ++j) r.mul_by_zeta();
    return r;
  }

  const Coords& coords() const { return c_; }
  const BigRational& coord(int k) const { return c_[k]; }

  bool is_zero() const {
    for (const auto& v : c_)
      if (!eiszeta::is_zero(v)) return false;
    return true;
  }

  bool is_rational() const {
    for (int k = 1; k < kDegree; ++k)
      if (!eiszeta::is_zero(c_[k])) return false;
    return true;
  }

  /// Checked narrowing; throws NotRational unless coords 1..7 vanish.
  BigRational to_rational() const {
    if (!is_rational()) throw Error(Errc::NotRational, "cyclotomic element has irrational part");
    return c_[0];
  }

  ComplexApprox embed() const {
    ComplexApprox r{0.0, 0.0};
    for (int k = 0; k < kDegree; ++k) {
      if (eiszeta::is_zero(c_[k])) continue;
      double angle = 2.0 * std::numbers::pi * k / kOrder;
      r += c_[k].get_d() * ComplexApprox(std::cos(angle), std::sin(angle));
    }
    return r;
  }

  CycloNumber operator-() const {
    CycloNumber r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  CycloNumber& operator+=(const CycloNumber& o) {
    for (int k = 0; k < kDegree; ++k) c_[k] += o.c_[k];
    return *this;
  }
  CycloNumber& operator-=(const CycloNumber& o) {
    for (int k = 0; k < kDegree; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  CycloNumber& operator*=(const BigRational& s) {
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const BigRational& s) { return a *= s; }
  friend CycloNumber operator*(const BigRational& s, CycloNumber a) { return a *= s; }

  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
    std::array<BigRational, 2 * kDegree - 1> acc;
    BigRational t;
    for (int i = 0; i < kDegree; ++i) {
      if (eiszeta::is_zero(a.c_[i])) continue;
      for (int j = 0; j < kDegree; ++j) {
        if (eiszeta::is_zero(b.c_[j])) continue;
        mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
        acc[i + j] += t;
      }
    }
    // z^k = z^(k-4) - z^(k-8) for k >= 8, folded from the top down.
    for (int k = 2 * kDegree - 2; k >= kDegree; --k) {
      if (eiszeta::is_zero(acc[k])) continue;
      acc[k - 4] += acc[k];
      acc[k - 8] -= acc[k];
    }
    CycloNumber r;
    for (int k = 0; k < kDegree; ++k) r.c_[k] = std::move(acc[k]);
    return r;
  }
  CycloNumber& operator*=(const CycloNumber& o) { return *this = *this * o; }

  friend bool operator==(const CycloNumber& a, const CycloNumber& b) { return a.c_ == b.c_; }

  /// Lexicographic on coordinates; used only for canonical ordering.
  friend int compare(const CycloNumber& a, const CycloNumber& b) {
    for (int k = 0; k < kDegree; ++k) {
      int s = cmp(a.c_[k], b.c_[k]);
      if (s != 0) return s < 0 ? -1 : 1;
    }
    return 0;
  }

  std::string to_string() const;

 private:
  void mul_by_zeta() {
    BigRational top = c_[kDegree - 1];
    for (int k = kDegree - 1; k > 0; --k) c_[k] = c_[k - 1];
    c_[0] = 0;
    c_[4] += top;
    c_[0] -= top;
  }

  Coords c_{};
};

inline CycloNumber inv(const CycloNumber& x);

inline CycloNumber operator/(const CycloNumber& a, const CycloNumber& b) { return a * inv(b); }

/// Multiplicative inverse by solving the 8x8 system (mult-by-x) * y = e_0.
inline CycloNumber inv(const CycloNumber& x) {
  if (x.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero cyclotomic element");
  constexpr int n = CycloNumber::kDegree;
  // Column j of the matrix is x * z^j.
  std::array<std::array<BigRational, n + 1>, n> m;
  CycloNumber col = x;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) m[i][j] = col.coord(i);
    col = col * CycloNumber::zeta_power(1);
  }
  m[0][n] = 1;
  for (int piv = 0; piv < n; ++piv) {
    int row = piv;
    while (row < n && is_zero(m[row][piv])) ++row;
    if (row == n) throw Error(Errc::DivisionByZero, "singular multiplication matrix");
    std::swap(m[row], m[piv]);
    BigRational scale = 1 / m[piv][piv];
    for (int j = piv; j <= n; ++j) m[piv][j] *= scale;
    for (int i = 0; i < n; ++i) {
      if (i == piv || is_zero(m[i][piv])) continue;
      BigRational f = m[i][piv];
      for (int j = piv; j <= n; ++j) m[i][j] -= f * m[piv][j];
    }
  }
  CycloNumber::Coords y;
  for (int i = 0; i < n; ++i) y[i] = m[i][n];
  return CycloNumber(std::move(y));
}

enum class CycloSymbol { SQRT2, SQRT3, I, ZETA3, ZETA8, ZETA12 };

inline CycloNumber cyclo_symbol(CycloSymbol s) {
  using Z = CycloNumber;
  switch (s) {
    case CycloSymbol::SQRT2: return Z::zeta_power(3) + Z::zeta_power(21);
    case CycloSymbol::SQRT3: return Z::zeta_power(2) + Z::zeta_power(22);
    case CycloSymbol::I: return Z::zeta_power(6);
    case CycloSymbol::ZETA3: return Z::zeta_power(8);
    case CycloSymbol::ZETA8: return Z::zeta_power(3);
    case CycloSymbol::ZETA12: return Z::zeta_power(2);
  }
  throw Error(Errc::InvalidArgument, "unknown cyclotomic symbol");
}

inline CycloSymbol parse_cyclo_symbol(std::string_view name) {
  if (name == "SQRT2") return CycloSymbol::SQRT2;
  if (name == "SQRT3") return CycloSymbol::SQRT3;
  if (name == "I") return CycloSymbol::I;
  if (name == "ZETA3") return CycloSymbol::ZETA3;
  if (name == "ZETA8") return CycloSymbol::ZETA8;
  if (name == "ZETA12") return CycloSymbol::ZETA12;
  throw Error(Errc::InvalidArgument, "unknown cyclotomic symbol '" + std::string(name) + "'");
}

inline std::string CycloNumber::to_string() const {
  std::string out;
  for (int k = 0; k < kDegree; ++k) {
    if (eiszeta::is_zero(c_[k])) continue;
    std::string term = eiszeta::to_string(c_[k]);
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
    if (k == 1) out += "*z";
    else if (k > 1) out += "*z^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace eiszeta

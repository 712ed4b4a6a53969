#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "eiszeta/error.hpp"
#include "eiszeta/poly.hpp"
#include "eiszeta/rational.hpp"

namespace eiszeta {

/// Truncated power series sum_k c_k u^k, where the true exponent of u^k is
/// k / denom. Terms with k >= order are discarded. All exponents, orders and
/// indices below are in lattice units.
class TruncSeries {
 public:
  TruncSeries(int denom, int order) : denom_(denom), c_(static_cast<std::size_t>(order)) {
    if (denom < 1) throw Error(Errc::InvalidArgument, "lattice denominator must be positive");
    if (order < 0) throw Error(Errc::InvalidArgument, "negative truncation order");
  }

  static TruncSeries constant(const BigRational& v, int order, int denom = 1) {
    TruncSeries s(denom, order);
    if (order > 0) s.c_[0] = v;
    return s;
  }

  static TruncSeries from_poly(const UniPoly& p, int order, int denom = 1) {
    TruncSeries s(denom, order);
    for (int k = 0; k <= p.degree() && k < order; ++k) s.c_[k] = p.coeffs()[k];
    return s;
  }

  int denom() const { return denom_; }
  int order() const { return static_cast<int>(c_.size()); }
  const std::vector<BigRational>& dense() const { return c_; }

  /// [u^k]; OrderExceeded if k >= order.
  const BigRational& coefficient(int k) const {
    if (k < 0) throw Error(Errc::InvalidArgument, "negative exponent");
    if (k >= order())
      throw Error(Errc::OrderExceeded,
                  "exponent " + std::to_string(k) + " not below order " + std::to_string(order()));
    return c_[k];
  }

  void set(int k, const BigRational& v) {
    if (k < 0) throw Error(Errc::InvalidArgument, "negative exponent");
    if (k < order()) c_[k] = v;
  }
  void add(int k, const BigRational& v) {
    if (k < 0) throw Error(Errc::InvalidArgument, "negative exponent");
    if (k < order()) c_[k] += v;
  }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const BigRational& v) { return eiszeta::is_zero(v); });
  }

  /// Largest exponent with a nonzero coefficient, -1 if none.
  int top_exponent() const {
    for (int k = order() - 1; k >= 0; --k)
      if (!eiszeta::is_zero(c_[k])) return k;
    return -1;
  }

  TruncSeries truncated(int order) const {
    TruncSeries r(denom_, std::min(order, this->order()));
    for (int k = 0; k < r.order(); ++k) r.c_[k] = c_[k];
    return r;
  }

  TruncSeries& operator*=(const BigRational& s) {
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    a.require_lattice(b);
    TruncSeries r(a.denom_, std::min(a.order(), b.order()));
    for (int k = 0; k < r.order(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    a.require_lattice(b);
    TruncSeries r(a.denom_, std::min(a.order(), b.order()));
    for (int k = 0; k < r.order(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
  }
  friend TruncSeries operator*(TruncSeries a, const BigRational& s) { return a *= s; }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.require_lattice(b);
    const int order = std::min(a.order(), b.order());
    TruncSeries r(a.denom_, order);
    BigRational t;
    for (int i = 0; i < order; ++i) {
      if (eiszeta::is_zero(a.c_[i])) continue;
      for (int j = 0; i + j < order; ++j) {
        if (eiszeta::is_zero(b.c_[j])) continue;
        mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
        r.c_[i + j] += t;
      }
    }
    return r;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.denom_ == b.denom_ && a.c_ == b.c_;
  }

 private:
  void require_lattice(const TruncSeries& o) const {
    if (o.denom_ != denom_) throw Error(Errc::LatticeMismatch, "series lattices differ");
  }

  int denom_;
  std::vector<BigRational> c_;
};

/// 1/s by exact long division; the constant term must be nonzero.
inline TruncSeries series_inverse(const TruncSeries& s) {
  const int order = s.order();
  TruncSeries r(s.denom(), order);
  if (order == 0) return r;
  const BigRational& c0 = s.dense()[0];
  if (is_zero(c0)) throw Error(Errc::DivisionByZero, "series with zero constant term is not invertible");
  BigRational inv0 = 1 / c0;
  r.set(0, inv0);
  for (int k = 1; k < order; ++k) {
    BigRational acc = 0;
    for (int j = 1; j <= k; ++j) {
      if (is_zero(s.dense()[j])) continue;
      acc += s.dense()[j] * r.dense()[k - j];
    }
    r.set(k, -acc * inv0);
  }
  return r;
}

inline TruncSeries series_pow(const TruncSeries& s, int e) {
  if (e < 0) return series_pow(series_inverse(s), -e);
  TruncSeries result = TruncSeries::constant(1, s.order(), s.denom());
  TruncSeries base = s;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

/// s(t) with t = T/(1-T) = T + T^2 + ..., re-truncated at s.order().
inline TruncSeries series_compose_T_over_1mT(const TruncSeries& s) {
  if (s.denom() != 1) throw Error(Errc::LatticeMismatch, "composition requires the integer lattice");
  const int order = s.order();
  TruncSeries geometric(1, order);
  for (int k = 1; k < order; ++k) geometric.set(k, 1);
  // Horner in t: (...(c_top t + c_{top-1}) t + ...) + c_0.
  TruncSeries acc(1, order);
  for (int k = s.top_exponent(); k >= 0; --k) {
    acc = acc * geometric;
    acc.add(0, s.dense()[k]);
  }
  return acc;
}

}  // namespace eiszeta

#pragma once

// Arbitrary-precision rationals (GMP) plus the handful of number-theoretic
// helpers the rest of the library needs: canonical "num/den" text form,
// binomials, primality by trial division and p-adic valuation.

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "eiszeta/error.hpp"

namespace eiszeta {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Sentinel returned by vp() for the valuation of zero.
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

inline bool is_zero(const BigRational& x) { return sgn(x) == 0; }

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

/// "num/den" in lowest terms, or "num" when den = 1.
inline std::string to_string(const BigRational& x) { return x.get_str(); }

inline BigRational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return BigRational(BigInt(s));
    return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw Error(Errc::InvalidArgument, "not a rational: '" + s + "'");
  }
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigRational rpow(const BigRational& base, unsigned long e) {
  BigRational r(ipow(base.get_num(), e), ipow(base.get_den(), e));
  return r;
}

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

inline void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
}

inline long vp(const BigInt& x, std::uint64_t p) {
  if (sgn(x) == 0) return kInfiniteValuation;
  BigInt prime(static_cast<unsigned long>(p));
  BigInt rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

/// p-adic valuation; vp(0, p) == kInfiniteValuation.
inline long vp(const BigRational& x, std::uint64_t p) {
  require_prime(p);
  if (is_zero(x)) return kInfiniteValuation;
  return vp(x.get_num(), p) - vp(x.get_den(), p);
}

inline bool is_p_integral(const BigRational& x, std::uint64_t p) { return vp(x, p) >= 0; }

}  // namespace eiszeta

#pragma once

// q-expansions: the theta constants f0, f1, the theta map x -> f0, y -> f1,
// Bernoulli numbers and the Eisenstein series
//   psi_k = 1 - (2k / B_k) sum_{n>=1} sigma_{k-1}(n) q^n.
//
// Theta expansions live on the lattice D = 4 in a variable u with u^4 = q,
// so f0 = sum_m u^(4 m^2) and f1 = sum_m u^((2m+1)^2).

#include <string>
#include <vector>

#include "eiszeta/error.hpp"
#include "eiszeta/poly.hpp"
#include "eiszeta/rational.hpp"
#include "eiszeta/series.hpp"

namespace eiszeta {

inline constexpr int kThetaLattice = 4;

struct QExpansion {
  TruncSeries series;
  std::string label;
};

/// parity 0: f0; parity 1: f1. `order` is in lattice units.
inline QExpansion theta_expansion(int parity, int order) {
  if (parity != 0 && parity != 1) throw Error(Errc::InvalidArgument, "theta parity must be 0 or 1");
  if (order < 1) throw Error(Errc::InvalidArgument, "theta order must be at least 1");
  TruncSeries s(kThetaLattice, order);
  // b runs over integers with b = parity (mod 2); exponent b^2/4 in q, i.e. b^2 in u.
  for (long b = parity; b * b < order; b += 2) {
    s.add(static_cast<int>(b * b), b == 0 ? 1 : 2);
  }
  return {std::move(s), parity == 0 ? "f0" : "f1"};
}

/// Th(f) = f(f0, f1), truncated at `order` lattice units.
inline QExpansion theta_map(const RationalHomogPoly& f, int order) {
  const int n = f.degree();
  TruncSeries f0 = theta_expansion(0, order).series;
  TruncSeries f1 = theta_expansion(1, order).series;
  TruncSeries result(kThetaLattice, order);
  if (f.is_zero()) return {result, "Th(0)"};

  std::vector<TruncSeries> p0{TruncSeries::constant(1, order, kThetaLattice)};
  std::vector<TruncSeries> p1{TruncSeries::constant(1, order, kThetaLattice)};
  for (int k = 1; k <= n; ++k) {
    p0.push_back(p0.back() * f0);
    p1.push_back(p1.back() * f1);
  }
  for (const auto& [i, a] : f.coeffs()) result = result + (p0[n - i] * p1[i]) * a;
  return {std::move(result), "Th(" + to_string(f) + ")"};
}

/// B_k from sum_{j=0}^{k} C(k+1, j) B_j = 0, B_0 = 1 (so B_1 = -1/2).
inline std::vector<BigRational> bernoulli_table(int kmax) {
  if (kmax < 0) throw Error(Errc::InvalidArgument, "Bernoulli index must be nonnegative");
  std::vector<BigRational> b(kmax + 1);
  b[0] = 1;
  for (int k = 1; k <= kmax; ++k) {
    BigRational acc = 0;
    for (int j = 0; j < k; ++j) acc += BigRational(binomial(k + 1, j)) * b[j];
    b[k] = -acc / BigRational(k + 1);
  }
  return b;
}

inline BigRational bernoulli(int k) { return bernoulli_table(k).back(); }

/// sigma_e(n) = sum of d^e over positive divisors d of n.
inline BigInt divisor_sigma(unsigned e, unsigned long n) {
  BigInt acc = 0;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    acc += ipow(BigInt(d), e);
    if (d != n / d) acc += ipow(BigInt(n / d), e);
  }
  return acc;
}

/// psi_k to `order` q-terms (exponents 0 .. order-1) on the integer lattice.
inline QExpansion eisenstein_series(int k, int order) {
  if (k < 2) throw Error(Errc::InvalidArgument, "Eisenstein series weight must be at least 2");
  if (order < 1) throw Error(Errc::InvalidArgument, "order must be at least 1");
  BigRational bk = bernoulli(k);
  if (is_zero(bk)) throw Error(Errc::ZeroBernoulli, "B_" + std::to_string(k) + " = 0");
  BigRational factor = -BigRational(2 * k) / bk;
  TruncSeries s(1, order);
  s.set(0, 1);
  for (int n = 1; n < order; ++n) s.set(n, factor * BigRational(divisor_sigma(k - 1, n)));
  return {std::move(s), "psi_" + std::to_string(k)};
}

}  // namespace eiszeta

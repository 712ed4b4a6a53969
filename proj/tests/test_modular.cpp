#include <gtest/gtest.h>

#include "test_util.hpp"
#include "eiszeta/modular.hpp"
#include "eiszeta/padic.hpp"

using namespace eiszeta;

namespace {

TruncSeries lattice_series(std::initializer_list<std::pair<int, long>> terms, int order) {
  TruncSeries s(kThetaLattice, order);
  for (auto [k, v] : terms) s.set(k, v);
  return s;
}

// Akiyama-Tanigawa; yields B_1 = +1/2, agrees with the recurrence for k != 1.
BigRational akiyama_tanigawa(int n) {
  std::vector<BigRational> a(n + 1);
  for (int m = 0; m <= n; ++m) {
    a[m] = BigRational(1, m + 1);
    for (int j = m; j >= 1; --j) a[j - 1] = BigRational(j) * (a[j - 1] - a[j]);
  }
  return a[0];
}

}  // namespace

TEST(Theta, Examples) {
  EXPECT_EQ(theta_expansion(0, 20).series, lattice_series({{0, 1}, {4, 2}, {16, 2}}, 20));
  EXPECT_EQ(theta_expansion(1, 30).series, lattice_series({{1, 2}, {9, 2}, {25, 2}}, 30));
  EXPECT_EQ(theta_expansion(0, 1).series, lattice_series({{0, 1}}, 1));
  EXPECT_THROW(theta_expansion(2, 10), Error);
}

TEST(Theta, CoefficientsCountLatticePoints) {
  const int order = 400;
  TruncSeries f0 = theta_expansion(0, order).series;
  TruncSeries f1 = theta_expansion(1, order).series;
  for (int e = 0; e < order; ++e) {
    long even = 0, odd = 0;
    for (long m = -20; m <= 20; ++m) {
      even += 4 * m * m == e;
      odd += (2 * m + 1) * (2 * m + 1) == e;
    }
    EXPECT_EQ(f0.coefficient(e), even) << e;
    EXPECT_EQ(f1.coefficient(e), odd) << e;
  }
}

TEST(ThetaMap, Substitution) {
  const int order = 200;
  EXPECT_EQ(theta_map(RationalHomogPoly(1, {{0, 1}}), order).series, theta_expansion(0, order).series);
  EXPECT_TRUE(theta_map(RationalHomogPoly(4), order).series.is_zero());

  TruncSeries f0 = theta_expansion(0, order).series, f1 = theta_expansion(1, order).series;
  TruncSeries direct = f0 * f0 + f1 * f1;
  TruncSeries th = theta_map(RationalHomogPoly(2, {{0, 1}, {2, 1}}), order).series;
  EXPECT_EQ(th, direct);
  for (const auto& c : th.dense()) {
    EXPECT_GE(sgn(c), 0);
    EXPECT_EQ(c.get_den(), 1);
  }
}

TEST(ThetaMap, TypeIIImageHasIntegerQPowers) {
  TruncSeries s = theta_map(RationalHomogPoly(8, {{0, 1}, {4, 14}, {8, 1}}), 100).series;
  EXPECT_EQ(s.coefficient(0), 1);
  for (int k = 0; k < s.order(); ++k)
    if (k % kThetaLattice != 0) { EXPECT_EQ(s.coefficient(k), 0) << k; }
  EXPECT_TRUE(series_integrality(s, 5).passed());
}

TEST(Bernoulli, Examples) {
  EXPECT_EQ(bernoulli(0), 1);
  EXPECT_EQ(bernoulli(1), BigRational(-1, 2));
  EXPECT_EQ(bernoulli(2), BigRational(1, 6));
  EXPECT_EQ(bernoulli(4), BigRational(-1, 30));
  EXPECT_EQ(bernoulli(3), 0);
}

TEST(Bernoulli, MatchesAkiyamaTanigawa) {
  auto table = bernoulli_table(40);
  for (int k = 0; k <= 40; ++k) {
    if (k == 1) continue;
    EXPECT_EQ(table[k], akiyama_tanigawa(k)) << k;
  }
}

TEST(EisensteinSeries, Examples) {
  TruncSeries psi4 = eisenstein_series(4, 3).series;
  EXPECT_EQ(psi4.coefficient(0), 1);
  EXPECT_EQ(psi4.coefficient(1), 240);
  EXPECT_EQ(psi4.coefficient(2), 2160);
  TruncSeries psi2 = eisenstein_series(2, 2).series;
  EXPECT_EQ(psi2.coefficient(1), -24);
  for (unsigned e = 0; e < 12; ++e) EXPECT_EQ(divisor_sigma(e, 1), 1);
  EXPECT_EQ(divisor_sigma(3, 2), 9);
  try {
    eisenstein_series(3, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroBernoulli);
  }
}

TEST(EisensteinSeries, Integrality) {
  for (std::uint64_t p : {5u, 7u, 11u, 13u})
    EXPECT_TRUE(series_integrality(eisenstein_series(static_cast<int>(p - 1), 200), p).passed()) << p;
  EXPECT_FALSE(series_integrality(eisenstein_series(12, 5), 691).passed());
  TruncSeries s(1, 2);
  s.set(1, BigRational(1, 7));
  EXPECT_FALSE(series_integrality(s, 7).passed());
}

TEST(ThetaMap, IntegralityAtWeight2pMinus2) {
  for (CodeType t : kAllTypes) {
    MatrixGroup g = builtin_group(t);
    for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
      EisensteinPoly e = average(g, static_cast<int>(2 * (p - 1)));
      if (!e.tilde) continue;
      EXPECT_TRUE(series_integrality(theta_map(*e.tilde, 200).series, p).passed()) << type_name(t) << " " << p;
    }
  }
}

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"
#include "eiszeta/groups.hpp"
#include "eiszeta/poly.hpp"
#include "eiszeta/series.hpp"

using namespace eiszeta;

namespace {

RationalHomogPoly random_poly(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> coef(-5, 5);
  RationalHomogPoly f(n);
  for (int i = 0; i <= n; ++i) f.add_term(i, coef(rng));
  return f;
}

TruncSeries series_of(std::initializer_list<long> coeffs, int order) {
  TruncSeries s(1, order);
  int k = 0;
  for (long c : coeffs) s.set(k++, c);
  return s;
}

}  // namespace

TEST(HomogPoly, ExpandLinearPower) {
  EXPECT_EQ(expand_linear_power(BigRational(1), BigRational(0), 5), RationalHomogPoly::monomial_x(5));
  EXPECT_EQ(expand_linear_power(BigRational(1), BigRational(1), 2), RationalHomogPoly(2, {{0, 1}, {1, 2}, {2, 1}}));
  const CycloNumber h = cyclo_symbol(CycloSymbol::SQRT2) * BigRational(1, 2);
  EXPECT_EQ(to_rational(expand_linear_power(h, h, 2)),
            RationalHomogPoly(2, {{0, BigRational(1, 2)}, {1, 1}, {2, BigRational(1, 2)}}));
}

TEST(HomogPoly, ArithmeticAndPrinting) {
  RationalHomogPoly f(8, {{0, 1}, {4, 14}, {8, 1}});
  EXPECT_EQ(to_string(f), "x^8+14x^4y^4+y^8");
  EXPECT_EQ(to_string(RationalHomogPoly(8, {{0, 1}, {2, BigRational(28, 9)}})), "x^8+(28/9)x^6y^2");
  EXPECT_EQ(to_string(RationalHomogPoly(12, {{0, 1}, {4, -33}, {8, -33}, {12, 1}})), "x^12-33x^8y^4-33x^4y^8+y^12");
  RationalHomogPoly g = f - f;
  EXPECT_TRUE(g.is_zero());
  EXPECT_EQ(f.coeff(3), 0);
  EXPECT_THROW(f + RationalHomogPoly(4), Error);
  EXPECT_THROW(f.add_term(9, 1), Error);
}

TEST(HomogPoly, SubstitutionCommutesWithProducts) {
  std::mt19937_64 rng(9);
  MatrixGroup g = builtin_group(CodeType::IV);
  for (int trial = 0; trial < 30; ++trial) {
    RationalHomogPoly f = random_poly(rng, 1 + trial % 6);
    RationalHomogPoly h = random_poly(rng, 1 + (trial * 5) % 6);
    const Mat2& s = g.elements()[trial % g.order()];
    EXPECT_EQ(act_on_poly(s, f * h), act_on_poly(s, f) * act_on_poly(s, h));
    RationalHomogPoly f2 = random_poly(rng, f.degree());
    EXPECT_EQ(act_on_poly(s, f + f2), act_on_poly(s, f) + act_on_poly(s, f2));
  }
}

TEST(UniPoly, Basics) {
  UniPoly p({BigRational(1, 5), BigRational(2, 5), BigRational(2, 5)});
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(to_string(p), "1/5+2T/5+2T^2/5");
  EXPECT_EQ(UniPoly({0, 0}).degree(), -1);
  EXPECT_EQ(to_string(UniPoly({1, -1}) * UniPoly({1, 1})), "1-T^2");
  EXPECT_EQ(to_latex(p), "\\frac{1}{5}+\\frac{2 T}{5}+\\frac{2 T^{2}}{5}");
}

TEST(UniPoly, Gcd) {
  UniPoly a = UniPoly({1, 2, 2}) * UniPoly({1, 0, -4});
  UniPoly b = UniPoly({1, 2, 2}) * UniPoly({3, 1});
  EXPECT_EQ(poly_gcd(a, b), UniPoly({BigRational(1, 2), 1, 1}));
  EXPECT_EQ(poly_gcd(UniPoly({1, 1}), UniPoly({1, -1})), UniPoly({1}));
}

TEST(Series, CompositionExamples) {
  EXPECT_EQ(series_compose_T_over_1mT(TruncSeries::constant(1, 4)), TruncSeries::constant(1, 4));
  EXPECT_EQ(series_compose_T_over_1mT(series_of({0, 1}, 4)), series_of({0, 1, 1, 1}, 4));
  TruncSeries kernel = series_inverse(series_of({1, 0, -1}, 5));  // 1/(1-t^2)
  EXPECT_EQ(series_compose_T_over_1mT(kernel), series_of({1, 0, 1, 2, 4}, 5));
}

TEST(Series, CompositionMatchesRationalFunctionExpansion) {
  // 1/(1 - (c t)^m) at t = T/(1-T) equals (1-T)^m / ((1-T)^m - c^m T^m).
  struct Kernel {
    long c;
    int m;
  };
  const int order = 16;
  for (Kernel k : {Kernel{1, 2}, Kernel{2, 3}, Kernel{3, 2}}) {
    TruncSeries denom = TruncSeries::constant(1, order);
    denom.set(k.m, -ipow(k.c, k.m));
    TruncSeries lhs = series_compose_T_over_1mT(series_inverse(denom));

    UniPoly one_minus_T_m({1});
    for (int j = 0; j < k.m; ++j) one_minus_T_m = one_minus_T_m * UniPoly({1, -1});
    std::vector<BigRational> cm(k.m + 1);
    cm[k.m] = -BigRational(ipow(k.c, k.m));
    UniPoly bottom = one_minus_T_m + UniPoly(cm);
    TruncSeries rhs = TruncSeries::from_poly(one_minus_T_m, order) *
                      series_inverse(TruncSeries::from_poly(bottom, order));
    EXPECT_EQ(lhs, rhs) << "c=" << k.c << " m=" << k.m;
  }
}

TEST(Series, CoefficientAccess) {
  TruncSeries geo = series_inverse(series_of({1, -2}, 10));
  EXPECT_EQ(geo.coefficient(3), 8);
  EXPECT_EQ(series_of({1}, 5).coefficient(4), 0);
  EXPECT_EQ(series_of({1, -2, 1}, 3).coefficient(1), -2);
  try {
    geo.coefficient(10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::OrderExceeded);
  }
}

TEST(Series, InverseOnRandomSeries) {
  std::mt19937_64 rng(100);
  std::uniform_int_distribution<int> coef(-7, 7), den(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const int order = 1 + trial % 20;
    TruncSeries s(1, order);
    for (int k = 0; k < order; ++k) s.set(k, make_rational(coef(rng), den(rng)));
    if (is_zero(s.dense()[0])) s.set(0, 1);
    EXPECT_EQ(s * series_inverse(s), TruncSeries::constant(1, order));
  }
}

TEST(Series, Errors) {
  EXPECT_THROW(series_inverse(series_of({0, 1}, 3)), Error);
  TruncSeries a(1, 4), b(4, 4);
  try {
    a * b;
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::LatticeMismatch);
  }
  EXPECT_THROW(series_compose_T_over_1mT(b), Error);
}

TEST(Series, Powers) {
  TruncSeries one_minus_T = series_of({1, -1}, 6);
  EXPECT_EQ(series_pow(one_minus_T, 2), series_of({1, -2, 1}, 6));
  EXPECT_EQ(series_pow(one_minus_T, -2), series_of({1, 2, 3, 4, 5, 6}, 6));
  EXPECT_EQ(series_pow(one_minus_T, 0), TruncSeries::constant(1, 6));
}

#include <gtest/gtest.h>

#include <array>
#include <complex>
#include <vector>

#include "test_util.hpp"
#include "eiszeta/eisenstein.hpp"

using namespace eiszeta;

namespace {

using C = std::complex<double>;
using M = std::array<C, 4>;

M mul(const M& x, const M& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

bool close(const M& x, const M& y) {
  for (int k = 0; k < 4; ++k)
    if (std::abs(x[k] - y[k]) > 1e-9) return false;
  return true;
}

// Floating-point group closure and average of (a x + b y)^l, built directly
// from numeric generator entries.
std::vector<C> float_average(const std::vector<M>& gens, int ell) {
  std::vector<M> elems{{1, 0, 0, 1}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      M next = mul(elems[i], g);
      bool seen = false;
      for (const auto& e : elems) seen = seen || close(e, next);
      if (!seen) elems.push_back(next);
    }
  std::vector<C> coeffs(ell + 1);
  for (const auto& e : elems) {
    for (int j = 0; j <= ell; ++j) {
      double binom = 1;
      for (int k = 1; k <= j; ++k) binom = binom * (ell - j + k) / k;
      coeffs[j] += binom * std::pow(e[0], ell - j) * std::pow(e[1], j);
    }
  }
  for (auto& c : coeffs) c /= static_cast<double>(elems.size());
  return coeffs;
}

std::vector<M> float_generators(CodeType t) {
  const double r2 = 1 / std::sqrt(2.0), r3 = 1 / std::sqrt(3.0);
  const C i(0, 1), w = std::polar(1.0, 2 * std::numbers::pi / 3);
  switch (t) {
    case CodeType::I: return {{r2, r2, r2, -r2}, {1, 0, 0, -1}};
    case CodeType::II: return {{r2, r2, r2, -r2}, {1, 0, 0, i}};
    case CodeType::III: return {{r3, 2 * r3, r3, -r3}, {1, 0, 0, w}};
    case CodeType::IV: return {{0.5, 1.5, 0.5, -0.5}, {1, 0, 0, -1}};
  }
  return {};
}

}  // namespace

TEST(Eisenstein, PublishedTypeIIWeight8) {
  EisensteinPoly e = average(builtin_group(CodeType::II), 8);
  ASSERT_TRUE(e.tilde);
  EXPECT_EQ(to_string(*e.tilde), "x^8+14x^4y^4+y^8");
}

TEST(Eisenstein, TypeIIVanishesUnlessEightDividesWeight) {
  MatrixGroup g = builtin_group(CodeType::II);
  for (int ell = 1; ell <= 24; ++ell) EXPECT_EQ(average(g, ell).tilde.has_value(), ell % 8 == 0) << ell;
}

TEST(Eisenstein, SmallExamples) {
  EXPECT_FALSE(average(builtin_group(CodeType::I), 3).tilde);
  EXPECT_TRUE(average(builtin_group(CodeType::I), 3).raw.is_zero());
  EXPECT_EQ(*average(builtin_group(CodeType::IV), 2).tilde, RationalHomogPoly(2, {{0, 1}, {2, 3}}));
  EXPECT_EQ(*average(builtin_group(CodeType::III), 4).tilde, RationalHomogPoly(4, {{0, 1}, {3, 8}}));
}

TEST(Eisenstein, ClosedFormExamples) {
  EXPECT_EQ(*closed_form(CodeType::I, 4), RationalHomogPoly(4, {{0, 1}, {2, 2}, {4, 1}}));
  EXPECT_EQ(*closed_form(CodeType::III, 4), RationalHomogPoly(4, {{0, 1}, {3, 8}}));
  EXPECT_FALSE(closed_form(CodeType::I, 3));
  EXPECT_THROW(closed_form(CodeType::II, 8), Error);
}

TEST(Eisenstein, ClosedFormsMatchAverage) {
  for (CodeType t : {CodeType::I, CodeType::III, CodeType::IV}) {
    MatrixGroup g = builtin_group(t);
    for (int ell = 1; ell <= 41; ++ell) {
      EisensteinPoly e = average(g, ell);
      auto cf = closed_form(t, ell);
      ASSERT_EQ(e.tilde.has_value(), cf.has_value()) << type_name(t) << " " << ell;
      if (cf) { EXPECT_EQ(*e.tilde, *cf) << type_name(t) << " " << ell; }
    }
  }
}

TEST(Eisenstein, PrintedBoundDropsTopTerm) {
  // Type IV, l = 4: the y^4 term 2/(2+16) * 81 = 9 is present in the average.
  EXPECT_EQ(average(builtin_group(CodeType::IV), 4).tilde->coeff(4), 9);
  EXPECT_EQ(closed_form(CodeType::IV, 4, SumBound::Printed)->coeff(4), 0);
  EXPECT_EQ(closed_form(CodeType::IV, 4)->coeff(4), 9);
}

TEST(Eisenstein, AverageMatchesFloatingPointOracle) {
  for (CodeType t : kAllTypes) {
    MatrixGroup g = builtin_group(t);
    auto gens = float_generators(t);
    for (int ell = 1; ell <= 16; ++ell) {
      EisensteinPoly e = average(g, ell);
      auto expected = float_average(gens, ell);
      for (int j = 0; j <= ell; ++j)
        EXPECT_LT(std::abs(e.raw.coeff(j).embed() - expected[j]), 1e-8) << type_name(t) << " l=" << ell << " j=" << j;
    }
  }
}

TEST(Eisenstein, RawIsInvariant) {
  for (CodeType t : kAllTypes) {
    MatrixGroup g = builtin_group(t);
    for (int ell = 2; ell <= 40; ell += 2) {
      EisensteinPoly e = average(g, ell);
      if (e.raw.is_zero()) continue;
      for (const auto& s : g.generators()) ASSERT_EQ(act_on_poly(s, e.raw), e.raw) << type_name(t) << " " << ell;
    }
  }
}

TEST(Eisenstein, TypeIPalindromic) {
  MatrixGroup g = builtin_group(CodeType::I);
  for (int ell = 2; ell <= 40; ell += 2) {
    auto f = *average(g, ell).tilde;
    for (int i = 0; i <= ell; ++i) EXPECT_EQ(f.coeff(i), f.coeff(ell - i)) << ell;
  }
}

TEST(Eisenstein, MinDistance) {
  EXPECT_EQ(min_distance(RationalHomogPoly(8, {{0, 1}, {4, 14}, {8, 1}})), 4);
  EXPECT_EQ(min_distance(RationalHomogPoly(4, {{0, 1}, {3, 8}})), 3);
  EXPECT_EQ(min_distance(RationalHomogPoly(2, {{0, 1}, {2, 3}})), 2);
  try {
    min_distance(RationalHomogPoly::monomial_x(5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoMinimumDistance);
  }
}

TEST(Eisenstein, ValidWeights) {
  EXPECT_TRUE(is_valid_weight(CodeType::III, 8));
  EXPECT_FALSE(is_valid_weight(CodeType::III, 6));
  EXPECT_FALSE(is_valid_weight(CodeType::II, 12));
  EXPECT_TRUE(is_valid_weight(CodeType::IV, 2));
  EXPECT_FALSE(is_valid_weight(CodeType::I, 0));
}

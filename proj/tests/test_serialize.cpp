#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"
#include "eiszeta/serialize.hpp"
#include "eiszeta/verify.hpp"

using namespace eiszeta;

TEST(Json, PolynomialRoundTrip) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> num(-100, 100), den(1, 30);
  for (int trial = 0; trial < 50; ++trial) {
    RationalHomogPoly f(trial % 13);
    for (int i = 0; i <= f.degree(); ++i) {
      BigRational c(num(rng), den(rng));
      c.canonicalize();
      f.add_term(i, c);
    }
    Json j = to_json(f);
    EXPECT_EQ(homog_poly_from_json(Json::parse(j.dump())), f);
  }
}

TEST(Json, SeriesRoundTrip) {
  TruncSeries s = theta_expansion(1, 50).series * BigRational(3, 7);
  EXPECT_EQ(series_from_json(Json::parse(to_json(s).dump())), s);
}

TEST(Json, Schemas) {
  Json p = to_json(UniPoly({BigRational(1, 5), BigRational(2, 5), BigRational(2, 5)}));
  EXPECT_EQ(p.dump(), R"({"degree":2,"coeffs":{"0":"1/5","1":"2/5","2":"2/5"}})");
  Json f = to_json(RationalHomogPoly(8, {{0, 1}, {4, 14}, {8, 1}}));
  EXPECT_EQ(f.dump(), R"({"n":8,"coeffs":{"0":"1","4":"14","8":"1"}})");
  Json g = to_json(builtin_group(CodeType::IV));
  EXPECT_EQ(g["order"], 12);
  EXPECT_EQ(g["elements"].size(), 12u);
}

TEST(Json, MalformedInput) {
  try {
    homog_poly_from_json(Json::parse(R"({"coeffs":{}})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidArgument);
  }
  EXPECT_THROW(series_from_json(Json::parse(R"({"D":1,"order":2,"coeffs":{"5":"1"}})")), Error);
}

TEST(Json, ReportsAreDeterministic) {
  VerifyConfig cfg;
  cfg.ell_max = 16;
  cfg.interlace_ell_max = 12;
  std::string a = to_json(check_rha(cfg)).dump() + to_json(check_interlacing(cfg)).dump();
  std::string b = to_json(check_rha(cfg)).dump() + to_json(check_interlacing(cfg)).dump();
  EXPECT_EQ(a, b);
}

#include <gtest/gtest.h>

#include "test_util.hpp"
#include "eiszeta/padic.hpp"

using namespace eiszeta;

TEST(Integrality, TypeIIWeight8AtFive) {
  IntegralityReport r = poly_integrality(*average(builtin_group(CodeType::II), 8).tilde, 5);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.min_valuation, 0);
}

TEST(Integrality, TypeIWeight12AtSeven) {
  RationalHomogPoly f = *average(builtin_group(CodeType::I), 12).tilde;
  EXPECT_EQ(f.coeff(2), 2);
  EXPECT_TRUE(poly_integrality(f, 7).passed());
}

TEST(Integrality, Witness) {
  IntegralityReport r = poly_integrality(std::vector<BigRational>{BigRational(1, 3)}, 3);
  EXPECT_FALSE(r.passed());
  ASSERT_EQ(r.offending_terms.size(), 1u);
  EXPECT_EQ(r.offending_terms[0], (std::pair<long, long>{0, -1}));
  EXPECT_EQ(r.min_valuation, -1);
  EXPECT_THROW(poly_integrality(std::vector<BigRational>{1}, 9), Error);
}

TEST(LemmaMod, Examples) {
  LemmaModResult i5 = lemma_mod_check(CodeType::I, 5);
  EXPECT_EQ(i5.value, 18);
  EXPECT_EQ(i5.residue, 3u);
  EXPECT_FALSE(i5.vanishes);

  LemmaModResult iii5 = lemma_mod_check(CodeType::III, 5);
  EXPECT_EQ(iii5.value, 84);
  EXPECT_EQ(iii5.residue, 4u);

  LemmaModResult i3 = lemma_mod_check(CodeType::I, 3);
  EXPECT_EQ(i3.value, 6);
  EXPECT_TRUE(i3.vanishes);

  LemmaModResult iv3 = lemma_mod_check(CodeType::IV, 3);
  EXPECT_EQ(iv3.value, 18);
  EXPECT_TRUE(iv3.vanishes);
}

TEST(LemmaMod, Errors) {
  try {
    lemma_mod_check(CodeType::I, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EvenPrime);
  }
  try {
    lemma_mod_check(CodeType::I, 15);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotPrime);
  }
  EXPECT_THROW(lemma_mod_check(CodeType::II, 5), Error);
}

TEST(LemmaMod, NonvanishingUpTo100) {
  for (CodeType t : {CodeType::I, CodeType::III, CodeType::IV})
    for (std::uint64_t p = 5; p <= 100; ++p)
      if (is_prime(p)) { EXPECT_FALSE(lemma_mod_check(t, p).vanishes) << type_name(t) << " " << p; }
}

TEST(Sweep, EisensteinAndZetaAtSmallPrimes) {
  auto items = integrality_sweep({CodeType::I, CodeType::II, CodeType::III, CodeType::IV}, {5, 7, 11, 13},
                                 {SweepTarget::EIS, SweepTarget::ZETA}, 1);
  for (const auto& it : items) {
    if (it.type == CodeType::II && (it.ell % 8 != 0)) {
      EXPECT_EQ(it.status, Status::FLAGGED);
      continue;
    }
    if (it.type == CodeType::II && it.what == SweepTarget::ZETA && it.p == 5) {
      EXPECT_EQ(it.status, Status::FLAGGED);
      continue;
    }
    EXPECT_EQ(it.status, Status::PASS) << type_name(it.type) << " p=" << it.p << " " << target_name(it.what);
  }
}

TEST(Sweep, TypeIZetaAtThree) {
  auto items = integrality_sweep({CodeType::I}, {3}, {SweepTarget::ZETA}, 1);
  ASSERT_EQ(items.size(), 1u);
  EXPECT_EQ(items[0].status, Status::FLAGGED);
  ASSERT_TRUE(items[0].report);
  EXPECT_FALSE(items[0].report->passed());
  EXPECT_EQ(items[0].report->min_valuation, -1);
}

TEST(Sweep, Targets) {
  EXPECT_EQ(parse_target("theta"), SweepTarget::THETA);
  EXPECT_THROW(parse_target("both"), Error);
  EXPECT_THROW(integrality_sweep({CodeType::I}, {2}, {SweepTarget::EIS}, 1), Error);
}

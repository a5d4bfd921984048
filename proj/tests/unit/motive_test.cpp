#include <gtest/gtest.h>

#include "motivic/formulas.hpp"
#include "motivic/motive.hpp"
#include "support/generators.hpp"

namespace motivic {
namespace {

using Terms = MotiveClass::TermMap;

MotiveClass make(Genus g, Terms terms) { return MotiveClass::from_terms(g, std::move(terms)); }

TEST(MotiveCore, ZeroHasNoTerms) {
  EXPECT_TRUE(zero(2).terms().empty());
  EXPECT_EQ(direct_sum(zero(3), unit(3)), unit(3));
  EXPECT_EQ(tensor(zero(2), unit(2)), zero(2));
}

TEST(MotiveCore, UnitIsSingleTerm) {
  EXPECT_EQ(unit(2).terms(), (Terms{{{0, 0}, 1}}));
  EXPECT_EQ(tensor(unit(2), lefschetz(2, 5)), make(2, {{{0, 5}, 1}}));
  EXPECT_EQ(sym_power_curve(0, 2), unit(2));
}

TEST(MotiveCore, LefschetzPowers) {
  EXPECT_EQ(lefschetz(2, 0), unit(2));
  EXPECT_EQ(lefschetz(2, 3).terms(), (Terms{{{0, 3}, 1}}));
  EXPECT_EQ(tensor(lefschetz(2, 1), lefschetz(2, 2)), lefschetz(2, 3));
}

TEST(MotiveCore, LambdaClasses) {
  EXPECT_EQ(lambda_h1(2, 0), unit(2));
  EXPECT_EQ(lambda_h1(2, 1).terms(), (Terms{{{1, 0}, 1}}));
  EXPECT_EQ(lambda_h1(2, 4).terms(), (Terms{{{4, 0}, 1}}));
  EXPECT_EQ(lambda_h1(2, 5), zero(2));
}

TEST(MotiveCore, DirectSum) {
  EXPECT_EQ(direct_sum(unit(2), unit(2)).terms(), (Terms{{{0, 0}, 2}}));
  EXPECT_EQ(direct_sum(lefschetz(2, 1), lambda_h1(2, 1)).terms(), (Terms{{{0, 1}, 1}, {{1, 0}, 1}}));
}

TEST(MotiveCore, TensorBasisRule) {
  EXPECT_EQ(tensor(lambda_h1(2, 1), lefschetz(2, 2)).terms(), (Terms{{{1, 2}, 1}}));
  // (1 + L)(1 + L^2)
  const auto lhs = make(2, {{{0, 0}, 1}, {{0, 1}, 1}});
  const auto rhs = make(2, {{{0, 0}, 1}, {{0, 2}, 1}});
  EXPECT_EQ(tensor(lhs, rhs).terms(), (Terms{{{0, 0}, 1}, {{0, 1}, 1}, {{0, 2}, 1}, {{0, 3}, 1}}));
}

TEST(MotiveCore, TensorOfTwoLambdaClassesIsRejected) {
  EXPECT_THROW(tensor(lambda_h1(2, 1), lambda_h1(2, 1)), NonTateTensor);
  EXPECT_THROW(tensor(lambda_h1(2, 1) + unit(2), lambda_h1(2, 2)), NonTateTensor);
  EXPECT_THROW(tensor_power(lambda_h1(2, 1), 2), NonTateTensor);
  EXPECT_EQ(tensor_power(lambda_h1(2, 1), 1), lambda_h1(2, 1));
  EXPECT_EQ(tensor_power(lambda_h1(2, 1), 0), unit(2));
}

TEST(MotiveCore, GenusIsChecked) {
  EXPECT_THROW(zero(1), GenusError);
  EXPECT_THROW(unit(0), GenusError);
  EXPECT_THROW(lefschetz(-3, 1), GenusError);
  EXPECT_THROW(direct_sum(unit(2), unit(3)), GenusMismatch);
  EXPECT_THROW(tensor(unit(2), unit(3)), GenusMismatch);
}

TEST(MotiveCore, FromTermsNormalizes) {
  const auto m = make(2, {{{0, 0}, 0}, {{5, 1}, 3}, {{4, 1}, 2}});
  EXPECT_EQ(m.terms(), (Terms{{{4, 1}, 2}}));
  EXPECT_THROW(make(2, {{{0, 0}, -1}}), std::invalid_argument);
}

TEST(MotiveCore, GeometricSumEmptyRangeIsZero) {
  EXPECT_EQ(geometric_sum(3, 0, -1), zero(3));
  EXPECT_EQ(geometric_sum(3, 0, 2), unit(3) + lefschetz(3, 1) + lefschetz(3, 2));
  EXPECT_EQ(geometric_sum(3, 0, 4, 2), unit(3) + lefschetz(3, 2) + lefschetz(3, 4));
  EXPECT_EQ(geometric_sum(3, 0, 0), unit(3));
}

TEST(MotiveCore, ToString) {
  EXPECT_EQ(to_string(zero(2)), "0");
  EXPECT_EQ(to_string(unit(2) + unit(2) + lambda_h1(2, 1) * lefschetz(2, 1) + lambda_h1(2, 3)),
            "2 + h1*L + lam(3)");
}

TEST(MotiveCore, TatePolynomialRejectsLambdaClasses) {
  EXPECT_NO_THROW(TatePolynomial(lefschetz(2, 1)));
  EXPECT_NO_THROW(TatePolynomial(zero(2)));
  EXPECT_THROW(TatePolynomial(lambda_h1(2, 1)), std::invalid_argument);
}

TEST(MotiveCore, AccumulatorMatchesFold) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    MotiveAccumulator acc(3);
    MotiveClass fold = zero(3);
    for (int i = 0; i < 5; ++i) {
      const auto m = testing::random_motive(rng, 3);
      acc.add(m);
      fold = fold + m;
    }
    EXPECT_EQ(std::move(acc).finish(), fold);
  }
}

// Algebraic laws on random operands.

class MotiveLaws : public ::testing::TestWithParam<Genus> {};

TEST_P(MotiveLaws, DirectSumIsCommutativeAssociativeWithIdentity) {
  const Genus g = GetParam();
  testing::Rng rng(1000 + g);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = testing::random_motive(rng, g);
    const auto b = testing::random_motive(rng, g);
    const auto c = testing::random_motive(rng, g);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + zero(g), a);
  }
}

TEST_P(MotiveLaws, TensorLawsWhereDefined) {
  const Genus g = GetParam();
  testing::Rng rng(2000 + g);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = testing::random_motive(rng, g);
    const auto s = testing::random_motive(rng, g, /*tate=*/true);
    const auto t = testing::random_motive(rng, g, /*tate=*/true);
    const auto b = testing::random_motive(rng, g);
    EXPECT_EQ(a * s, s * a);
    EXPECT_EQ((a * s) * t, a * (s * t));
    EXPECT_EQ(a * (s + t), a * s + a * t);
    EXPECT_EQ((a + b) * s, a * s + b * s);
    EXPECT_EQ(a * unit(g), a);
    EXPECT_EQ(a * zero(g), zero(g));
  }
}

TEST_P(MotiveLaws, ClosureInvariants) {
  const Genus g = GetParam();
  testing::Rng rng(3000 + g);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = testing::random_motive(rng, g);
    const auto s = testing::random_motive(rng, g, true);
    for (const auto& m : {a + s, a * s, tensor_power(s, 3)}) {
      EXPECT_EQ(m.genus(), g);
      for (const auto& [key, mult] : m.terms()) {
        EXPECT_GT(mult, 0);
        EXPECT_LE(key.lambda_index, static_cast<std::uint32_t>(2 * g));
      }
    }
  }
}

TEST_P(MotiveLaws, TensorPowerIsRepeatedTensor) {
  const Genus g = GetParam();
  testing::Rng rng(4000 + g);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = testing::random_motive(rng, g, true, 3);
    MotiveClass repeated = unit(g);
    for (std::uint64_t n = 0; n <= 5; ++n) {
      EXPECT_EQ(tensor_power(s, n), repeated);
      repeated = repeated * s;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Genera, MotiveLaws, ::testing::Values(2, 3, 5));

}  // namespace
}  // namespace motivic

#include <gtest/gtest.h>

#include <vector>

#include "motivic/integer.hpp"

namespace motivic {
namespace {

TEST(Binomial, MatchesPascalTriangle) {
  std::vector<std::vector<Integer>> pascal(81);
  for (std::size_t n = 0; n < pascal.size(); ++n) {
    pascal[n].assign(n + 1, Integer(1));
    for (std::size_t k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
  }
  for (std::uint64_t n = 0; n < pascal.size(); ++n) {
    for (std::uint64_t k = 0; k <= n; ++k) ASSERT_EQ(binomial(n, k), pascal[n][k]) << n << " " << k;
  }
}

TEST(Binomial, ZeroAboveN) {
  EXPECT_EQ(binomial(4, 5), 0);
  EXPECT_EQ(binomial(0, 1), 0);
  EXPECT_EQ(binomial(0, 0), 1);
}

TEST(Binomial, BeyondSixtyFourBits) {
  // C(60, 30) = 118264581564861424, C(100, 50) exceeds 2^64.
  EXPECT_EQ(to_decimal(binomial(60, 30)), "118264581564861424");
  EXPECT_EQ(to_decimal(binomial(100, 50)), "100891344545564193334812497256");
}

TEST(Decimal, ParsesSignedLiterals) {
  EXPECT_EQ(parse_decimal("42"), 42);
  EXPECT_EQ(parse_decimal("-7"), -7);
  EXPECT_EQ(parse_decimal("+7"), 7);
  EXPECT_EQ(to_decimal(parse_decimal("123456789012345678901234567890")), "123456789012345678901234567890");
}

TEST(Decimal, RejectsMalformed) {
  EXPECT_THROW(parse_decimal(""), std::invalid_argument);
  EXPECT_THROW(parse_decimal("-"), std::invalid_argument);
  EXPECT_THROW(parse_decimal("12a"), std::invalid_argument);
  EXPECT_THROW(parse_decimal(" 1"), std::invalid_argument);
}

}  // namespace
}  // namespace motivic

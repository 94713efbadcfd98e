#include <gtest/gtest.h>

#include "oracles.hpp"
#include "soficonv/error.hpp"
#include "soficonv/linalg.hpp"
#include "soficonv/rational.hpp"

using namespace soficonv;

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("1.625"), Rational(13, 8));
  EXPECT_EQ(parse_rational("-0.5"), Rational(-1, 2));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
}

TEST(Rational, CanonicalText) {
  EXPECT_EQ(to_string(parse_rational("4/8")), "1/2");
  EXPECT_EQ(to_string(Rational(5)), "5");
  EXPECT_EQ(to_string(Integer("123456789012345678901234567890")), "123456789012345678901234567890");
}

TEST(Rational, DigitWords) {
  EXPECT_EQ(parse_digits("0121"), (std::vector<int>{0, 1, 2, 1}));
  EXPECT_EQ(parse_digits("0,11,2"), (std::vector<int>{0, 11, 2}));
  EXPECT_EQ(format_digits({1, 0, 1}), "101");
  EXPECT_EQ(format_digits({1, 12}), "1,12");
  EXPECT_EQ(split_list(" a, b ,c"), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(ceil_div(7, 2), 4);
  EXPECT_EQ(ceil_div(6, 2), 3);
}

TEST(Linalg, NullspaceOfRankDeficientMatrix) {
  RationalMatrix a{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  auto ker = nullspace(a);
  ASSERT_EQ(ker.size(), 1u);
  auto image = a * ker[0];
  for (const auto& x : image) EXPECT_EQ(x, 0);
  EXPECT_EQ(rank(a), 2u);
}

TEST(Linalg, FixedVectorOfStochasticTranspose) {
  RationalMatrix m{{Rational(1, 2), Rational(1, 3)}, {Rational(1, 2), Rational(2, 3)}};
  auto c = fixed_vector(m);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(m * c, c);
  EXPECT_EQ(c[1] / c[0], Rational(3, 2));
  auto r = left_fixed_vector(m.transpose());
  EXPECT_EQ(r * m.transpose(), r);
}

TEST(Linalg, FixedVectorRejectsTwoDimensionalEigenspace) {
  auto id = RationalMatrix::identity(2);
  try {
    fixed_vector(id);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::KernelDimension);
  }
}

TEST(Linalg, Irreducibility) {
  EXPECT_TRUE(is_irreducible(RationalMatrix{{0, 1}, {1, 0}}));
  EXPECT_FALSE(is_irreducible(RationalMatrix{{1, 1}, {0, 1}}));
}

TEST(LinalgProperty, RandomNullspacesAreKernels) {
  oracle::Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 5));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 5));
    RationalMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = rng.uniform(-2, 2);
    auto ker = nullspace(a);
    EXPECT_EQ(ker.size() + rank(a), cols);
    for (const auto& v : ker)
      for (const auto& x : a * v) EXPECT_EQ(x, 0);
  }
}

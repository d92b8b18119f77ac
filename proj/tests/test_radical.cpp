#include <random>

#include <gtest/gtest.h>

#include "gaindex/errors.hpp"
#include "gaindex/radical.hpp"
#include "oracle.hpp"

using gaindex::RadicalNumber;
using gaindex::ratio;

TEST(Radical, SquarefreeSplit) {
  EXPECT_EQ(gaindex::radical_sqrt(72), (gaindex::SquarefreeSplit{6, 2}));
  EXPECT_EQ(gaindex::radical_sqrt(1), (gaindex::SquarefreeSplit{1, 1}));
  EXPECT_EQ(gaindex::radical_sqrt(49), (gaindex::SquarefreeSplit{7, 1}));
  EXPECT_THROW(gaindex::radical_sqrt(0), std::invalid_argument);
  for (std::uint64_t k = 1; k < 2000; ++k) {
    const auto s = gaindex::radical_sqrt(k);
    EXPECT_EQ(s.square_root * s.square_root * s.squarefree, k);
    EXPECT_TRUE(gaindex::is_squarefree(s.squarefree));
  }
}

TEST(Radical, CanonicalSquareRoots) {
  EXPECT_EQ(RadicalNumber::sqrt_of(std::uint64_t{8}), RadicalNumber::term(2, 2));
  EXPECT_EQ(RadicalNumber::sqrt_of(std::uint64_t{9}), RadicalNumber(3L));
  EXPECT_EQ(RadicalNumber::sqrt_of(ratio(1, 2)), RadicalNumber::term(ratio(1, 2), 2));
  EXPECT_TRUE(RadicalNumber::sqrt_of(std::uint64_t{16}).is_integer());
  EXPECT_FALSE(RadicalNumber::sqrt_of(std::uint64_t{12}).is_rational());
}

TEST(Radical, ArithmeticMatchesHighPrecision) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> radicand(1, 60);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int trial = 0; trial < 300; ++trial) {
    RadicalNumber a, b;
    for (int i = 0; i < 3; ++i) {
      a += RadicalNumber::term(ratio(coeff(rng), 1 + radicand(rng) % 7), radicand(rng));
      b += RadicalNumber::term(ratio(coeff(rng), 1 + radicand(rng) % 5), radicand(rng));
    }
    const oracle::High va = oracle::value(a);
    const oracle::High vb = oracle::value(b);
    EXPECT_LT(abs(oracle::value(a + b) - (va + vb)), 1e-40);
    EXPECT_LT(abs(oracle::value(a * b) - va * vb), 1e-40);
    const oracle::High diff = va - vb;
    const int expected = diff > 0 ? 1 : (diff < 0 ? -1 : 0);
    const auto order = a <=> b;
    const int got = order > 0 ? 1 : (order < 0 ? -1 : 0);
    EXPECT_EQ(got, expected) << a.to_string() << " vs " << b.to_string();
  }
}

TEST(Radical, CloseValuesCompareCorrectly) {
  // sqrt(2) + sqrt(3) vs sqrt(10) + tiny offsets near agreement.
  const RadicalNumber lhs = RadicalNumber::sqrt_of(std::uint64_t{2}) + RadicalNumber::sqrt_of(std::uint64_t{3});
  const RadicalNumber rhs = RadicalNumber::sqrt_of(std::uint64_t{10}) - RadicalNumber(ratio(1, 1000000000));
  EXPECT_EQ(lhs <=> rhs, oracle::value(lhs) > oracle::value(rhs) ? std::strong_ordering::greater
                                                                 : std::strong_ordering::less);
  // 99 sqrt 2 vs 70 sqrt 4 + ... : 99 sqrt(2) ~ 140.007, 140 + 1/200
  const RadicalNumber p = RadicalNumber::term(99, 2);
  const RadicalNumber q = RadicalNumber(ratio(28001, 200));
  EXPECT_EQ(p <=> q, oracle::value(p) > oracle::value(q) ? std::strong_ordering::greater
                                                         : std::strong_ordering::less);
}

TEST(Radical, StringRoundTrip) {
  const RadicalNumber x = RadicalNumber(1L) + RadicalNumber::term(ratio(4, 5), 6) +
                          RadicalNumber::term(ratio(1, 2), 3);
  EXPECT_EQ(RadicalNumber::parse(x.to_string()), x);
  EXPECT_EQ(RadicalNumber::parse("4/3*sqrt(8)"), RadicalNumber::term(ratio(8, 3), 2));
  EXPECT_EQ(RadicalNumber::parse("0"), RadicalNumber());
  EXPECT_THROW(RadicalNumber::parse("1 + sqrt("), gaindex::ParseError);
}

TEST(Radical, FloatConversion) {
  const RadicalNumber x = RadicalNumber::term(ratio(5, 3), 5);
  const auto approx = gaindex::to_float(x);
  EXPECT_NEAR(approx.value, 5.0 / 3.0 * std::sqrt(5.0), 1e-14);
  EXPECT_EQ(gaindex::to_float(RadicalNumber()).value, 0.0);
  EXPECT_EQ(gaindex::to_decimal_string(RadicalNumber::sqrt_of(std::uint64_t{2}), 10).substr(0, 11),
            "1.414213562");
}

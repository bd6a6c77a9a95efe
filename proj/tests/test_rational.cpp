#include <gtest/gtest.h>

#include "hyperdec/rational.hpp"

using namespace hyperdec;

TEST(Rational, FloorAndCeilRoundTowardInfinities) {
  EXPECT_EQ(floor(Rational(7, 2)), 3);
  EXPECT_EQ(floor(Rational(-7, 2)), -4);
  EXPECT_EQ(ceil(Rational(-7, 2)), -3);
  EXPECT_EQ(floor(Rational(4)), 4);
}

TEST(Rational, ModFloorIsNonNegative) {
  EXPECT_EQ(mod_floor(Integer(-7), Integer(4)), 1);
  EXPECT_EQ(mod_floor(Integer(7), Integer(4)), 3);
}

TEST(Rational, MakeRationalCanonicalizesAndRejectsZeroDenominator) {
  EXPECT_EQ(to_string(make_rational(Integer(6), Integer(-4))), "-3/2");
  EXPECT_THROW(make_rational(Integer(1), Integer(0)), Error);
}

TEST(Rational, Powers) {
  EXPECT_EQ(pow10(3), 1000);
  EXPECT_EQ(pow10(-2), Rational(1, 100));
  EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
}

TEST(Rational, DecimalExpansionShape) {
  EXPECT_EQ(decimal_preperiod(Integer(1100)), 2u);
  EXPECT_EQ(decimal_period(Integer(1100)), 2u);
  EXPECT_EQ(decimal_period(Integer(7)), 6u);
  EXPECT_EQ(decimal_period(Integer(8)), 1u);
  EXPECT_EQ(coprime_to_ten(Integer(40)), 1);
}

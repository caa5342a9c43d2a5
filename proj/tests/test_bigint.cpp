#include "hstar/bigint.hpp"

#include <gtest/gtest.h>

using namespace hstar;

TEST(BigInt, RoundTripsThroughStrings) {
    const BigInt big = parse_bigint("123456789012345678901234567890");
    EXPECT_EQ(to_string(big), "123456789012345678901234567890");
    EXPECT_FALSE(fits_int64(big));
    EXPECT_EQ(to_int64(parse_bigint("-42")), -42);
}

TEST(BigInt, RejectsGarbage) {
    EXPECT_THROW(parse_bigint("12x"), Error);
    EXPECT_THROW(parse_rational("1/0"), Error);
}

TEST(Rational, PrintsReducedForm) {
    EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
    EXPECT_EQ(to_string(parse_rational("-8/4")), "-2");
    EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(Rational, FloorAndFractionalPartFollowFloorConvention) {
    EXPECT_EQ(floor(Rational(-1, 3)), -1);
    EXPECT_EQ(fractional_part(Rational(-1, 3)), Rational(2, 3));
    EXPECT_EQ(fractional_part(Rational(7, 3)), Rational(1, 3));
    EXPECT_EQ(fractional_part(Rational(5)), 0);
    EXPECT_EQ(floor_div(BigInt(-7), BigInt(2)), -4);
    EXPECT_EQ(mod_floor(-7, 3), 2);
}

TEST(NumberTheory, SmallHelpers) {
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(97));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(91));
    EXPECT_EQ(binomial(6, 3), 20);
    EXPECT_EQ(binomial(4, 5), 0);
    EXPECT_EQ(ipow(BigInt(3), 4), 81);
    EXPECT_EQ(gcd64(12, -18), 6);
}

#include <gtest/gtest.h>

#include "colsum/exact.hpp"

using namespace colsum;

TEST(Exact, FactorialAndDoubleFactorial) {
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(20), ExactInt("2432902008176640000"));
    EXPECT_EQ(factorial(25), ExactInt("15511210043330985984000000"));
    EXPECT_EQ(double_factorial(-1), 1);
    EXPECT_EQ(double_factorial(0), 1);
    EXPECT_EQ(double_factorial(7), 105);
    EXPECT_EQ(double_factorial(8), 384);
    EXPECT_THROW(double_factorial(-2), std::invalid_argument);
    for (long n = 1; n <= 30; ++n) EXPECT_EQ(double_factorial(n) * double_factorial(n - 1), factorial(n));
}

TEST(Exact, BinomialPascal) {
    for (long n = 1; n <= 40; ++n)
        for (long k = 1; k < n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
    EXPECT_EQ(binomial(5, 7), 0);
}

TEST(Exact, DecimalRoundTrip) {
    ExactInt big = power(ExactInt(3), 200) - 1;
    EXPECT_EQ(parse_exact_int(to_decimal(big)), big);
    EXPECT_EQ(parse_exact_int("-17"), -17);
    EXPECT_THROW(parse_exact_int("12x"), std::invalid_argument);
    EXPECT_THROW(parse_exact_int(""), std::invalid_argument);
}

TEST(Exact, Rationals) {
    EXPECT_EQ(make_rational(6, 4), Rational(3, 2));
    EXPECT_EQ(to_string(make_rational(6, 4)), "3/2");
    EXPECT_EQ(to_string(make_rational(8, 4)), "2");
    EXPECT_EQ(parse_rational("-5/2"), Rational(-5, 2));
    EXPECT_EQ(parse_rational("4/2"), Rational(2));
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_TRUE(is_integral(make_rational(9, 3)));
    EXPECT_FALSE(is_integral(make_rational(9, 2)));
    EXPECT_EQ(to_integer(make_rational(9, 3), "x"), 3);
    EXPECT_THROW(to_integer(make_rational(9, 2), "x"), NonIntegralError);
}

TEST(Exact, ExactDivide) {
    EXPECT_EQ(exact_divide(factorial(10), factorial(5), "q"), 30240);
    EXPECT_THROW(exact_divide(10, 3, "q"), NonIntegralError);
}

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace colsum {

using ExactInt = mpz_class;
using Rational = mpq_class;

// Raised when a quantity that must be an integer (o_r with rational r, a
// census division, a continued-fraction coefficient) comes out fractional.
class NonIntegralError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

ExactInt factorial(long n);

// (n)!! for n >= -1, with (-1)!! = (0)!! = 1.
ExactInt double_factorial(long n);

ExactInt binomial(long n, long k);

ExactInt power(const ExactInt& base, unsigned long exponent);
Rational power(const Rational& base, unsigned long exponent);

std::string to_decimal(const ExactInt& v);
ExactInt parse_exact_int(std::string_view text);

// Accepts "3", "-5/2", "1/2".
Rational parse_rational(std::string_view text);
Rational make_rational(long num, long den);
std::string to_string(const Rational& q);

bool is_integral(const Rational& q);
ExactInt to_integer(const Rational& q, std::string_view what);

// Exact quotient; throws NonIntegralError if den does not divide num.
ExactInt exact_divide(const ExactInt& num, const ExactInt& den, std::string_view what);

}  // namespace colsum

#include "colsum/exact.hpp"

#include <string>

namespace colsum {

ExactInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative number");
    ExactInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

ExactInt double_factorial(long n) {
    if (n < -1) throw std::invalid_argument("double factorial below -1");
    if (n <= 0) return 1;
    ExactInt out;
    mpz_2fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

ExactInt binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial with negative n");
    if (k < 0 || k > n) return 0;
    ExactInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

ExactInt power(const ExactInt& base, unsigned long exponent) {
    ExactInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

Rational power(const Rational& base, unsigned long exponent) {
    Rational out(power(ExactInt(base.get_num()), exponent), power(ExactInt(base.get_den()), exponent));
    out.canonicalize();
    return out;
}

std::string to_decimal(const ExactInt& v) { return v.get_str(10); }

ExactInt parse_exact_int(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    ExactInt out;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos)
        throw std::invalid_argument("not an integer: '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    out.set_str(s, 10);
    return out;
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_exact_int(text));
    ExactInt num = parse_exact_int(text.substr(0, slash));
    ExactInt den = parse_exact_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q{ExactInt(num), ExactInt(den)};
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

bool is_integral(const Rational& q) { return q.get_den() == 1; }

ExactInt to_integer(const Rational& q, std::string_view what) {
    if (!is_integral(q))
        throw NonIntegralError(std::string(what) + " is not an integer: " + to_string(q));
    return ExactInt(q.get_num());
}

ExactInt exact_divide(const ExactInt& num, const ExactInt& den, std::string_view what) {
    if (den == 0) throw std::domain_error(std::string(what) + ": division by zero");
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw NonIntegralError(std::string(what) + ": " + to_decimal(num) + " not divisible by " +
                               to_decimal(den));
    ExactInt out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

}  // namespace colsum

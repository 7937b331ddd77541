#pragma once

#include <optional>
#include <string>

#include "colsum/exact.hpp"

namespace colsum {

// A polynomial in z reduced modulo z^2 = 1: (even-z mass, odd-z mass).
// Multiplication is that of the group ring of Z/2, so reducing before or after
// multiplying gives the same parities.
struct ZPair {
    ExactInt even;
    ExactInt odd;

    ZPair() : even(0), odd(0) {}
    ZPair(long v) : even(v), odd(0) {}  // NOLINT(google-explicit-constructor)
    ZPair(ExactInt v) : even(std::move(v)), odd(0) {}  // NOLINT(google-explicit-constructor)
    ZPair(ExactInt e, ExactInt o) : even(std::move(e)), odd(std::move(o)) {}

    static ZPair z() { return ZPair(0, 1); }

    // Keep the even powers of z, drop the odd ones.
    const ExactInt& filter() const noexcept { return even; }
    ExactInt total() const { return even + odd; }

    ZPair& operator+=(const ZPair& o) {
        even += o.even;
        odd += o.odd;
        return *this;
    }
    ZPair& operator-=(const ZPair& o) {
        even -= o.even;
        odd -= o.odd;
        return *this;
    }
    ZPair& operator*=(const ZPair& o) {
        ExactInt e = even * o.even + odd * o.odd;
        ExactInt d = even * o.odd + odd * o.even;
        even = std::move(e);
        odd = std::move(d);
        return *this;
    }
    friend ZPair operator+(ZPair a, const ZPair& b) { return a += b; }
    friend ZPair operator-(ZPair a, const ZPair& b) { return a -= b; }
    friend ZPair operator*(ZPair a, const ZPair& b) { return a *= b; }
    friend ZPair operator-(const ZPair& a) { return ZPair(-a.even, -a.odd); }
    friend bool operator==(const ZPair& a, const ZPair& b) { return a.even == b.even && a.odd == b.odd; }
};

inline std::string to_string(const ZPair& p) {
    return "(" + to_decimal(p.even) + ", " + to_decimal(p.odd) + ")";
}

// The units are +-1 and +-z; each is its own inverse.
inline std::optional<ZPair> unit_inverse(const ZPair& p) {
    bool unit = (p.odd == 0 && (p.even == 1 || p.even == -1)) || (p.even == 0 && (p.odd == 1 || p.odd == -1));
    if (!unit) return std::nullopt;
    return p;
}

inline std::optional<ExactInt> unit_inverse(const ExactInt& v) {
    if (v == 1 || v == -1) return v;
    return std::nullopt;
}

inline std::optional<Rational> unit_inverse(const Rational& v) {
    if (v == 0) return std::nullopt;
    Rational out = 1 / v;
    return out;
}

}  // namespace colsum

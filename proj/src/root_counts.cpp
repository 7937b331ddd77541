#include "colsum/root_counts.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace colsum {

ExactInt o_r(int n, const ExactInt& r) {
    if (n < 0) throw std::invalid_argument("o_r needs n >= 0");
    ExactInt out = 0;
    ExactInt rk = 1;
    for (int k = 0; 2 * k <= n; ++k) {
        out += binomial(n, 2 * k) * double_factorial(2 * k - 1) * rk;
        rk *= r;
    }
    return out;
}

ExactInt o_r(int n, const Rational& r) {
    if (n < 0) throw std::invalid_argument("o_r needs n >= 0");
    if (is_integral(r)) return o_r(n, ExactInt(r.get_num()));
    Rational out = 0;
    Rational rk = 1;
    for (int k = 0; 2 * k <= n; ++k) {
        out += Rational(binomial(n, 2 * k) * double_factorial(2 * k - 1)) * rk;
        rk *= r;
    }
    return to_integer(out, "o_r(" + std::to_string(n) + ", " + to_string(r) + ")");
}

ExactInt o_ry(int m, const Rational& r, const ExactInt& y) {
    if (m < 0) throw std::invalid_argument("o_ry needs m >= 0");
    Rational out = 0;
    for (int j = 0; 2 * j <= m; ++j)
        out += Rational(binomial(m, 2 * j) * double_factorial(2 * j - 1) *
                        power(ExactInt(1 + y), static_cast<unsigned long>(m - 2 * j))) *
               power(r, static_cast<unsigned long>(j));
    return to_integer(out, "o_r(m, y)");
}

namespace {

// Block weights are requested millions of times with few distinct arguments.
enum class BlockKind : std::uint64_t { sqrt_even_color, sqrt_odd_color, abs_zero, abs_pair, abs_half };

template <class Compute>
const ExactInt& memo(BlockKind kind, int r, int length, int mult, Compute&& compute) {
    thread_local std::unordered_map<std::uint64_t, ExactInt> cache;
    if (r >= (1 << 16) || length >= (1 << 16) || mult >= (1 << 16)) {
        thread_local ExactInt scratch;
        scratch = compute();
        return scratch;
    }
    std::uint64_t key = (static_cast<std::uint64_t>(kind) << 48) | (static_cast<std::uint64_t>(r) << 32) |
                        (static_cast<std::uint64_t>(length) << 16) | static_cast<std::uint64_t>(mult);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, compute()).first;
    return it->second;
}

ExactInt matchings(int pairs, const ExactInt& weight) {
    return double_factorial(2 * pairs - 1) * power(weight, static_cast<unsigned long>(pairs));
}

}  // namespace

ExactInt gamma_A(const Partition& p) { return gamma_sqrt_Grn(RPartiteType::single(1, 0, p)); }

namespace detail {

ExactInt sqrt_block(int r, int color, int length, int mult) {
    if (mult == 0) return 1;
    const bool odd_color = (r % 2 == 0) && (color % 2 == 1);
    return memo(odd_color ? BlockKind::sqrt_odd_color : BlockKind::sqrt_even_color, r, length, mult, [&]() -> ExactInt {
        const ExactInt lr = ExactInt(length) * r;
        if (length % 2 == 0 || odd_color) {
            if (mult % 2 != 0) return 0;
            return matchings(mult / 2, lr);
        }
        if (r % 2 == 1) return o_r(mult, lr);
        // Even r, even colour, odd length: unmatched cycles have two square roots each.
        ExactInt out = 0;
        for (int j = 0; 2 * j <= mult; ++j)
            out += binomial(mult, 2 * j) * double_factorial(2 * j - 1) * power(lr, static_cast<unsigned long>(j)) *
                   power(ExactInt(2), static_cast<unsigned long>(mult - 2 * j));
        return out;
    });
}

ExactInt abs_block_zero(int r, int length, int mult) {
    if (mult == 0) return 1;
    return memo(BlockKind::abs_zero, r, length, mult, [&]() -> ExactInt {
        if (length % 2 == 0) {
            if (mult % 2 != 0) return 0;
            return matchings(mult / 2, ExactInt(length) * r);
        }
        ExactInt out = 0;
        for (int j = 0; 2 * j <= mult; ++j)
            out += binomial(mult, 2 * j) * double_factorial(2 * j - 1) *
                   power(ExactInt(length), static_cast<unsigned long>(j)) *
                   power(ExactInt(r), static_cast<unsigned long>(mult - j));
        return out;
    });
}

ExactInt abs_block_pair(int r, int length, int mult) {
    if (mult == 0) return 1;
    return memo(BlockKind::abs_pair, r, length, mult, [&]() -> ExactInt {
        return factorial(mult) * power(ExactInt(ExactInt(length) * r), static_cast<unsigned long>(mult));
    });
}

ExactInt abs_block_half(int r, int length, int mult) {
    if (mult == 0) return 1;
    return memo(BlockKind::abs_half, r, length, mult, [&]() -> ExactInt {
        if (mult % 2 != 0) return 0;
        return matchings(mult / 2, ExactInt(length) * r);
    });
}

}  // namespace detail

ZPair block_poly_D(BlockSign sign, int length, int mult) {
    if (length < 1 || mult < 0) throw std::invalid_argument("block_poly_D: bad block");
    if (mult == 0) return ZPair(1);
    if (sign == BlockSign::negative) {
        // Negative cycles pair up; each merged pair is one negative cycle of the root.
        if (mult % 2 != 0) return ZPair();
        const int pairs = mult / 2;
        ExactInt w = matchings(pairs, ExactInt(2 * length));
        return pairs % 2 == 0 ? ZPair(w, 0) : ZPair(0, w);
    }
    if (length % 2 == 0) {
        if (mult % 2 != 0) return ZPair();
        return ZPair(matchings(mult / 2, ExactInt(2 * length)), 0);
    }
    // Positive odd cycles: j merged pairs (weight 2l each, always positive) and
    // m-2j unmatched cycles whose roots may be either sign, contributing (1+z).
    ZPair out;
    for (int j = 0; 2 * j <= mult; ++j) {
        ExactInt w = binomial(mult, 2 * j) * double_factorial(2 * j - 1) *
                     power(ExactInt(2 * length), static_cast<unsigned long>(j));
        const int free = mult - 2 * j;
        if (free == 0) {
            out += ZPair(w, 0);
        } else {
            ExactInt half = power(ExactInt(2), static_cast<unsigned long>(free - 1));
            out += ZPair(w * half, w * half);
        }
    }
    return out;
}

ExactInt gamma_D(const DnClass& c) {
    const auto& b = c.bip();
    if (b.mu_length() % 2 != 0) throw std::invalid_argument("gamma_D: not a D_n class");
    return gamma_D_blocks(b);
}

}  // namespace colsum

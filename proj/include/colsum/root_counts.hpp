#pragma once

#include "colsum/exact.hpp"
#include "colsum/partition.hpp"
#include "colsum/zpair.hpp"

namespace colsum {

// o_r(n) = sum_k C(n,2k) (2k-1)!! r^k.
ExactInt o_r(int n, const ExactInt& r);
// Rational r is allowed when the result is an integer; NonIntegralError otherwise.
ExactInt o_r(int n, const Rational& r);
// o_r(m, y) = sum_j C(m,2j) (2j-1)!! r^j (1+y)^{m-2j}.
ExactInt o_ry(int m, const Rational& r, const ExactInt& y);

// Number of x in S_n with x^2 of cycle type p.
ExactInt gamma_A(const Partition& p);

namespace detail {
// Square roots inside one (colour t, length l, multiplicity m) block of G(r,1,n).
ExactInt sqrt_block(int r, int color, int length, int mult);
// Absolute square roots of the colour-0 block.
ExactInt abs_block_zero(int r, int length, int mult);
// Colours t and r-t with m cycles of length l each (mirror pair).
ExactInt abs_block_pair(int r, int length, int mult);
// Colour r/2 for even r.
ExactInt abs_block_half(int r, int length, int mult);
}  // namespace detail

template <CycleTypeLike T>
ExactInt gamma_sqrt_Grn(const T& type) {
    const int r = type.r();
    ExactInt out = 1;
    for (int t = 0; t < r; ++t) {
        for (const auto& b : type.component(t).blocks()) {
            ExactInt w = detail::sqrt_block(r, t, b.part, b.multiplicity);
            if (w == 0) return 0;
            out *= w;
        }
    }
    return out;
}

// Column sum of the character table of G(r,1,n) at the class of the given type.
template <CycleTypeLike T>
ExactInt gamma_abs_Grn(const T& type) {
    const int r = type.r();
    ExactInt out = 1;
    for (const auto& b : type.component(0).blocks()) {
        ExactInt w = detail::abs_block_zero(r, b.part, b.multiplicity);
        if (w == 0) return 0;
        out *= w;
    }
    for (int t = 1; 2 * t < r; ++t) {
        if (!(type.component(t) == type.component(r - t))) return 0;
        for (const auto& b : type.component(t).blocks()) out *= detail::abs_block_pair(r, b.part, b.multiplicity);
    }
    if (r % 2 == 0 && r > 1) {
        for (const auto& b : type.component(r / 2).blocks()) {
            ExactInt w = detail::abs_block_half(r, b.part, b.multiplicity);
            if (w == 0) return 0;
            out *= w;
        }
    }
    return out;
}

inline ExactInt gamma_B(const Bipartition& b) { return gamma_sqrt_Grn(b); }

enum class BlockSign { positive, negative };

// Square roots in B_n of one block of a D_n class, split by the parity of the
// number of negative cycles of the root (only even parity lies in D_n).
ZPair block_poly_D(BlockSign sign, int length, int mult);

// filter(prod of block_poly_D) for a bipartition-shaped type (colour 0
// positive, colour 1 negative) with an even number of negative cycles.
template <CycleTypeLike T>
ExactInt gamma_D_blocks(const T& bip) {
    ZPair acc(1);
    for (const auto& b : bip.component(0).blocks()) acc *= block_poly_D(BlockSign::positive, b.part, b.multiplicity);
    for (const auto& b : bip.component(1).blocks()) acc *= block_poly_D(BlockSign::negative, b.part, b.multiplicity);
    return acc.filter();
}

// Number of x in D_n with x^2 equal to a representative of c.
ExactInt gamma_D(const DnClass& c);

}  // namespace colsum

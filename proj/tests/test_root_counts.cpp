#include <gtest/gtest.h>

#include "colsum/partition.hpp"
#include "colsum/root_counts.hpp"
#include "colsum/text_format.hpp"
#include "oracles.hpp"
#include "uncorrected_weights.hpp"

using namespace colsum;

namespace {

// |centraliser| of an element of G(r,1,n) with the given type.
ExactInt centralizer(const RPartiteType& t) {
    ExactInt z = 1;
    for (int c = 0; c < t.r(); ++c)
        for (const auto& b : t.component(c).blocks())
            z *= power(ExactInt(ExactInt(b.part) * t.r()), static_cast<unsigned long>(b.multiplicity)) * factorial(b.multiplicity);
    return z;
}

oracle::Signed flip_first(const oracle::Signed& w) {
    oracle::Signed s{std::vector<int>(w.perm.size()), std::vector<int>(w.perm.size(), 0)};
    for (std::size_t i = 0; i < s.perm.size(); ++i) s.perm[i] = static_cast<int>(i);
    s.neg[0] = 1;
    return oracle::signed_compose(oracle::signed_compose(s, w), s);
}

}  // namespace

TEST(RootCounts, OrSmallValues) {
    // o_1(n) are the involution numbers.
    const long inv[] = {1, 1, 2, 4, 10, 26, 76, 232, 764};
    for (int n = 0; n <= 8; ++n) EXPECT_EQ(o_r(n, ExactInt(1)), inv[n]);
    EXPECT_EQ(o_r(4, ExactInt(2)), 1 + 6 * 2 + 3 * 4);
}

TEST(RootCounts, OrRejectsFractionalResults) {
    EXPECT_THROW(o_r(2, make_rational(1, 2)), NonIntegralError);
    EXPECT_EQ(o_r(2, make_rational(4, 2)), 3);
}

TEST(RootCounts, SymmetricMatchesBruteForce) {
    for (int n = 1; n <= 7; ++n)
        for (const auto& [type, roots] : oracle::sym_roots(n))
            EXPECT_EQ(gamma_A(Partition(type)), roots) << format_partition(Partition(type));
}

TEST(RootCounts, HyperoctahedralMatchesBruteForce) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& b : bipartitions_of(n)) {
            auto w = oracle::signed_representative(b.lambda().parts(), b.mu().parts());
            EXPECT_EQ(gamma_B(b), oracle::count_signed_roots(w, false)) << format_bipartition(b);
        }
}

TEST(RootCounts, DemihyperoctahedralMatchesBruteForceBothSigns) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& c : dn_classes(n)) {
            auto w = oracle::signed_representative(c.bip().lambda().parts(), c.bip().mu().parts());
            if (c.sign() == DnSign::minus) w = flip_first(w);
            EXPECT_EQ(gamma_D(c), oracle::count_signed_roots(w, true)) << format_dn_class(c);
        }
}

TEST(RootCounts, PredicatesAgreeWithNonzeroCounts) {
    for (int n = 0; n <= 9; ++n) {
        for (const auto& p : partitions_of(n)) EXPECT_EQ(gamma_A(p) > 0, has_sqrt_A(p));
        for (const auto& b : bipartitions_of(n)) EXPECT_EQ(gamma_B(b) > 0, has_sqrt_B(b));
        if (n > 0)
            for (const auto& c : dn_classes(n)) EXPECT_EQ(gamma_D(c) > 0, has_sqrt_D(c));
    }
    for (int r = 3; r <= 5; ++r)
        for (int n = 0; n <= 5; ++n)
            for (const auto& t : r_partite_types(r, n)) {
                EXPECT_EQ(gamma_sqrt_Grn(t) > 0, has_sqrt_Grn(t)) << format_r_partite(t);
                EXPECT_EQ(gamma_abs_Grn(t) > 0, has_abs_sqrt_Grn(t)) << format_r_partite(t);
            }
}

TEST(RootCounts, AbsoluteEqualsSquareAtTwoColours) {
    for (int n = 0; n <= 10; ++n)
        for_each_r_partite(2, n, [&](const RPartiteView& v) { EXPECT_EQ(gamma_abs_Grn(v), gamma_sqrt_Grn(v)); });
}

TEST(RootCounts, OneColourIsSymmetric) {
    for (int n = 0; n <= 10; ++n)
        for (const auto& p : partitions_of(n)) {
            auto t = RPartiteType::single(1, 0, p);
            EXPECT_EQ(gamma_sqrt_Grn(t), gamma_A(p));
            EXPECT_EQ(gamma_abs_Grn(t), gamma_A(p));
        }
}

// Every group element has exactly one square: sum over types of |class| * roots = |G|,
// i.e. sum of roots / |centraliser| = 1. Same for x -> x xbar.
TEST(RootCounts, MassConservation) {
    for (int r = 1; r <= 5; ++r)
        for (int n = 0; n <= 6; ++n) {
            Rational sq = 0, ab = 0;
            for (const auto& t : r_partite_types(r, n)) {
                auto z = centralizer(t);
                Rational a(gamma_sqrt_Grn(t), z), b(gamma_abs_Grn(t), z);
                a.canonicalize();
                b.canonicalize();
                sq += a;
                ab += b;
            }
            EXPECT_EQ(sq, 1) << "r=" << r << " n=" << n;
            EXPECT_EQ(ab, 1) << "r=" << r << " n=" << n;
        }
}

TEST(RootCounts, MassConservationInDn) {
    for (int n = 1; n <= 10; ++n) {
        ExactInt total = 0;
        for (const auto& c : dn_classes(n)) {
            ExactInt size = factorial(n) * power(ExactInt(2), static_cast<unsigned long>(n)) /
                            centralizer(RPartiteType::from(c.bip()));
            if (c.sign() != DnSign::none) size /= 2;
            total += size * gamma_D(c);
        }
        EXPECT_EQ(total, factorial(n) * power(ExactInt(2), static_cast<unsigned long>(n - 1))) << n;
    }
}

TEST(BlockPolyD, ParityMassesSumToTheBnBlock) {
    for (int len = 1; len <= 5; ++len)
        for (int m = 0; m <= 6; ++m) {
            EXPECT_EQ(block_poly_D(BlockSign::positive, len, m).total(), detail::sqrt_block(2, 0, len, m));
            EXPECT_EQ(block_poly_D(BlockSign::negative, len, m).total(), detail::sqrt_block(2, 1, len, m));
        }
}

TEST(BlockPolyD, Fixtures) {
    EXPECT_EQ(block_poly_D(BlockSign::positive, 1, 2), ZPair(4, 2));
    EXPECT_EQ(block_poly_D(BlockSign::positive, 1, 1), ZPair(1, 1));
    EXPECT_EQ(block_poly_D(BlockSign::positive, 2, 2), ZPair(4, 0));
    EXPECT_EQ(block_poly_D(BlockSign::negative, 1, 2), ZPair(0, 2));
    EXPECT_EQ(block_poly_D(BlockSign::negative, 1, 4), ZPair(12, 0));
    EXPECT_EQ(block_poly_D(BlockSign::positive, 2, 3), ZPair());
    EXPECT_THROW(block_poly_D(BlockSign::positive, 0, 1), std::invalid_argument);
}

TEST(BlockPolyD, ColourLiftFactorsAreNeeded) {
    auto cls22 = parse_dn_class("2,2|-+");
    auto id2 = parse_dn_class("1,1|-");
    EXPECT_EQ(gamma_D(cls22), 4);
    EXPECT_EQ(gamma_D(parse_dn_class("2,2|--")), 4);
    EXPECT_EQ(gamma_D(id2), 4);
    EXPECT_EQ(uncorrected::even_positive(1, 1), 2);
    EXPECT_EQ(uncorrected::odd_positive(1, 2), 3);
    auto w22 = oracle::signed_representative({2, 2}, {});
    EXPECT_EQ(oracle::count_signed_roots(w22, true), 4);
    EXPECT_EQ(oracle::count_signed_roots(oracle::signed_representative({1, 1}, {}), true), 4);
}

TEST(RootCounts, GammaDRejectsOddNegativeCount) {
    EXPECT_THROW(gamma_D(DnClass(Bipartition(Partition({1}), Partition({1})))), std::invalid_argument);
}

#include <gtest/gtest.h>

#include "colsum/group_oracle.hpp"
#include "colsum/root_counts.hpp"
#include "colsum/sequences.hpp"
#include "oracles.hpp"
#include "reference_values.hpp"

using namespace colsum;

namespace {

std::vector<ExactInt> values(Family f, int r, int n, Method m) { return seq_table_sum(f, r, n, m).values; }

}  // namespace

TEST(Sequences, SymmetricTotalsMatchPublishedList) {
    auto s = values(Family::A, 1, 12, Method::direct);
    for (int n = 1; n <= 12; ++n) EXPECT_EQ(to_decimal(s[n]), reference::kSymTotals[n - 1]) << n;
}

TEST(Sequences, HyperoctahedralMatchesPublishedLists) {
    auto s = values(Family::B, 2, 9, Method::direct);
    auto i = seq_involutions(Family::B, 2, 9).values;
    for (int n = 1; n <= 9; ++n) {
        EXPECT_EQ(to_decimal(s[n]), reference::kHyperTotals[n - 1]) << n;
        EXPECT_EQ(to_decimal(i[n]), reference::kHyperInvolutions[n - 1]) << n;
    }
}

TEST(Sequences, DemihyperoctahedralTable) {
    auto s = values(Family::D, 2, 15, Method::direct);
    auto i = seq_involutions(Family::D, 2, 15).values;
    for (const auto& row : reference::kDemiTable) {
        EXPECT_EQ(to_decimal(i[row.n]), row.gamma_e) << row.n;
        EXPECT_EQ(to_decimal(s[row.n]), row.total) << row.n;
    }
}

TEST(Sequences, TripleAgreementA) {
    auto d = values(Family::A, 1, 25, Method::direct);
    EXPECT_EQ(d, values(Family::A, 1, 25, Method::gf));
    EXPECT_EQ(d, values(Family::A, 1, 25, Method::convolution));
    auto o = values(Family::A, 1, 7, Method::oracle);
    for (int n = 0; n <= 7; ++n) EXPECT_EQ(o[n], d[n]);
}

TEST(Sequences, TripleAgreementB) {
    auto d = values(Family::B, 2, 20, Method::direct);
    EXPECT_EQ(d, values(Family::B, 2, 20, Method::gf));
    EXPECT_EQ(d, values(Family::B, 2, 20, Method::convolution));
    auto o = values(Family::B, 2, 5, Method::oracle);
    for (int n = 0; n <= 5; ++n) EXPECT_EQ(o[n], d[n]);
}

TEST(Sequences, DirectEqualsGfForD) {
    EXPECT_EQ(values(Family::D, 2, 18, Method::direct), values(Family::D, 2, 18, Method::gf));
    auto o = values(Family::D, 2, 5, Method::oracle);
    auto d = values(Family::D, 2, 5, Method::direct);
    EXPECT_EQ(o, d);
}

TEST(Sequences, DirectEqualsGfForColouredFamilies) {
    for (int r = 1; r <= 5; ++r) {
        EXPECT_EQ(values(Family::G, r, 12, Method::direct), values(Family::G, r, 12, Method::gf)) << r;
        EXPECT_EQ(values(Family::Gsq, r, 12, Method::direct), values(Family::Gsq, r, 12, Method::gf)) << r;
    }
    EXPECT_EQ(values(Family::G, 3, 4, Method::oracle), values(Family::G, 3, 4, Method::direct));
    EXPECT_EQ(values(Family::G, 4, 3, Method::oracle), values(Family::G, 4, 3, Method::direct));
    EXPECT_EQ(values(Family::Gsq, 3, 4, Method::oracle), values(Family::Gsq, 3, 4, Method::direct));
}

TEST(Sequences, SquareAndAbsoluteCoincideAtTwoColours) {
    EXPECT_EQ(total_sum_gf(Family::Gsq, 2, 30), total_sum_gf(Family::B, 2, 30));
    EXPECT_EQ(total_sum_gf(Family::G, 2, 30), total_sum_gf(Family::B, 2, 30));
    EXPECT_EQ(total_sum_gf(Family::G, 1, 30), total_sum_gf(Family::A, 1, 30));
}

TEST(Sequences, GfTruncationIsStable) {
    for (auto [f, r] : std::vector<std::pair<Family, int>>{
             {Family::A, 1}, {Family::B, 2}, {Family::D, 2}, {Family::G, 3}, {Family::Gsq, 4}}) {
        auto a = total_sum_gf(f, r, 25);
        auto b = total_sum_gf(f, r, 30);
        EXPECT_EQ(a, b.truncated(25)) << to_string(f);
    }
}

TEST(Sequences, SerialAndParallelDirectSumsAgree) {
    for (auto [f, r, n] : std::vector<std::tuple<Family, int, int>>{
             {Family::A, 1, 20}, {Family::B, 2, 14}, {Family::D, 2, 14}, {Family::G, 3, 9}, {Family::Gsq, 4, 7}})
        EXPECT_EQ(table_sum_direct(f, r, n, true), table_sum_direct(f, r, n, false)) << to_string(f);
}

TEST(Involutions, RecurrencesAndBruteForce) {
    auto a = seq_involutions(Family::A, 1, 30).values;
    auto b = seq_involutions(Family::B, 2, 30).values;
    auto d = seq_involutions(Family::D, 2, 30).values;
    auto brute = oracle::involutions_by_count(8);
    for (int n = 0; n <= 8; ++n) EXPECT_EQ(a[n], brute[static_cast<std::size_t>(n)]);
    EXPECT_EQ(b[0], 1);
    EXPECT_EQ(b[1], 2);
    for (int n = 2; n <= 30; ++n) {
        EXPECT_EQ(a[n], a[n - 1] + (n - 1) * a[n - 2]);
        EXPECT_EQ(b[n], 2 * b[n - 1] + 2 * (n - 1) * b[n - 2]);
    }
    for (int n = 1; n <= 5; ++n) {
        auto id = oracle::signed_representative(std::vector<int>(static_cast<std::size_t>(n), 1), {});
        EXPECT_EQ(d[n], oracle::count_signed_roots(id, true)) << n;
        EXPECT_EQ(b[n], oracle::count_signed_roots(id, false)) << n;
    }
}

TEST(Involutions, ColouredIdentityRoots) {
    // roots of the identity of G(r,1,n): G is x xbar = e, Gsq is x^2 = e
    for (int r = 1; r <= 4; ++r)
        for (int n = 1; n <= 3; ++n) {
            auto spec = GroupSpec::general(r, 1, n);
            auto e = ColoredPermutation::identity(r, n);
            EXPECT_EQ(seq_involutions(Family::G, r, n).values[n], count_roots(spec, e, RootKind::absolute));
            EXPECT_EQ(seq_involutions(Family::Gsq, r, n).values[n], count_roots(spec, e, RootKind::square));
        }
}

TEST(Derangements, SymmetricMatchesNaiveOracle) {
    auto g = seq_g(Family::A, 7).values;
    for (int n = 1; n <= 7; ++n) {
        ExactInt expect = 0;
        for (const auto& [type, roots] : oracle::sym_roots(n))
            if (std::find(type.begin(), type.end(), 1) == type.end()) expect += roots;
        EXPECT_EQ(g[n], expect) << n;
    }
    EXPECT_THROW(seq_g(Family::D, 5), std::invalid_argument);
}

TEST(ZeroColumns, GfMatchesScanForAllFamilies) {
    for (int n = 1; n <= 30; ++n) EXPECT_TRUE(zero_column_count(Family::A, 1, n, true).consistent()) << n;
    for (int n = 1; n <= 20; ++n) {
        EXPECT_TRUE(zero_column_count(Family::B, 2, n, true).consistent()) << n;
        EXPECT_TRUE(zero_column_count(Family::D, 2, n, true).consistent()) << n;
    }
    for (int r = 3; r <= 5; ++r)
        for (int n = 1; n <= 12; ++n) {
            EXPECT_TRUE(zero_column_count(Family::G, r, n, true).consistent()) << r << " " << n;
            EXPECT_TRUE(zero_column_count(Family::Gsq, r, n, true).consistent()) << r << " " << n;
        }
}

TEST(ZeroColumns, SymmetricZerosArePartitionsWithPartTwoModFour) {
    for (int n = 1; n <= 30; ++n) {
        std::size_t expect = 0;
        for (const auto& p : partitions_of(n))
            expect += std::any_of(p.parts().begin(), p.parts().end(), [](int x) { return x % 4 == 2; });
        EXPECT_EQ(zero_column_count(Family::A, 1, n).zero, ExactInt(static_cast<unsigned long>(expect))) << n;
    }
}

TEST(ZeroColumns, ClassCounts) {
    auto p = oracle::partition_numbers(15);
    for (int n = 0; n <= 15; ++n) {
        EXPECT_EQ(class_count(Family::A, 1, n), ExactInt(p[static_cast<std::size_t>(n)]));
        EXPECT_EQ(class_count(Family::B, 2, n), ExactInt(static_cast<unsigned long>(bipartitions_of(n).size())));
        if (n > 0)
            EXPECT_EQ(class_count(Family::D, 2, n), ExactInt(static_cast<unsigned long>(dn_classes(n).size())));
    }
}

TEST(Sequences, ParseAndReject) {
    EXPECT_EQ(parse_family("Gsq"), Family::Gsq);
    EXPECT_EQ(parse_method("convolution"), Method::convolution);
    EXPECT_THROW(parse_family("E"), std::invalid_argument);
    EXPECT_THROW(parse_method("magic"), std::invalid_argument);
    EXPECT_THROW(seq_table_sum(Family::D, 2, 5, Method::convolution), std::invalid_argument);
    EXPECT_EQ(family_r(Family::A, 7), 1);
    EXPECT_EQ(family_r(Family::D, 7), 2);
    EXPECT_EQ(family_r(Family::G, 7), 7);
}

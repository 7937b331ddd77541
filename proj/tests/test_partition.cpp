#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "colsum/partition.hpp"
#include "colsum/text_format.hpp"
#include "oracles.hpp"

using namespace colsum;

TEST(Partition, RejectsMalformedParts) {
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
    EXPECT_EQ(Partition::from_unsorted({1, 3, 2, 3}), Partition({3, 3, 2, 1}));
}

TEST(Partition, BlocksAndMultiplicity) {
    Partition p({4, 2, 2, 1, 1, 1});
    ASSERT_EQ(p.blocks().size(), 3u);
    EXPECT_EQ(p.blocks()[0].part, 4);
    EXPECT_EQ(p.blocks()[1].multiplicity, 2);
    EXPECT_EQ(p.multiplicity(1), 3);
    EXPECT_EQ(p.multiplicity(3), 0);
    EXPECT_EQ(p.size(), 11);
    EXPECT_EQ(p.length(), 6);
    EXPECT_TRUE(p.has_odd_part());
    EXPECT_FALSE(p.all_parts_even());
    std::vector<Partition::Block> blocks{{3, 2}, {1, 1}};
    EXPECT_EQ(Partition::from_blocks(blocks), Partition({3, 3, 1}));
}

TEST(Partition, CountsMatchPentagonalRecurrence) {
    auto p = oracle::partition_numbers(30);
    for (int n = 0; n <= 30; ++n) EXPECT_EQ(partitions_of(n).size(), p[n]) << n;
}

TEST(Partition, StreamIsReverseLexWithoutRepeats) {
    for (int n = 1; n <= 14; ++n) {
        PartitionStream s(n);
        std::optional<Partition> prev;
        std::size_t count = 0;
        while (auto q = s.next()) {
            EXPECT_EQ(q->size(), n);
            if (prev) EXPECT_TRUE(q->parts() < prev->parts());
            prev = q;
            ++count;
        }
        EXPECT_EQ(count, partitions_of(n).size());
    }
}

TEST(Partition, StreamRespectsMaxPart) {
    PartitionStream s(10, 3);
    std::size_t count = 0;
    while (auto q = s.next()) {
        EXPECT_LE(q->parts().front(), 3);
        ++count;
    }
    EXPECT_EQ(count, 14u);  // partitions of 10 into parts <= 3
}

TEST(Partition, WeakCompositions) {
    for (int r = 1; r <= 4; ++r)
        for (int n = 0; n <= 7; ++n) {
            auto w = weak_compositions(n, r);
            EXPECT_EQ(ExactInt(static_cast<unsigned long>(w.size())), binomial(n + r - 1, r - 1));
            EXPECT_TRUE(std::is_sorted(w.rbegin(), w.rend()));
            for (const auto& c : w) EXPECT_EQ(std::accumulate(c.begin(), c.end(), 0), n);
        }
}

TEST(Partition, RPartiteCountIsPowerOfPartitionGf) {
    auto p = oracle::partition_numbers(12);
    for (int r = 1; r <= 4; ++r) {
        // coefficients of P(q)^r by repeated convolution
        std::vector<ExactInt> acc(13, 0);
        acc[0] = 1;
        for (int t = 0; t < r; ++t) {
            std::vector<ExactInt> next(13, 0);
            for (int i = 0; i <= 12; ++i)
                for (int j = 0; i + j <= 12; ++j) next[i + j] += acc[i] * static_cast<unsigned long>(p[j]);
            acc = next;
        }
        for (int n = 0; n <= 8; ++n) {
            EXPECT_EQ(r_partite_count(r, n), acc[n]);
            EXPECT_EQ(ExactInt(static_cast<unsigned long>(r_partite_types(r, n).size())), acc[n]);
        }
    }
}

TEST(Partition, EveryRPartiteTypeVisitedOnce) {
    for (int r = 1; r <= 4; ++r)
        for (int n = 0; n <= 6; ++n) {
            std::set<RPartiteType> seen;
            std::size_t visits = 0;
            for_each_r_partite(r, n, [&](const RPartiteView& v) {
                EXPECT_EQ(v.size(), n);
                seen.insert(v.materialize());
                ++visits;
            });
            EXPECT_EQ(seen.size(), visits);
            EXPECT_EQ(ExactInt(static_cast<unsigned long>(visits)), r_partite_count(r, n));
        }
}

TEST(Partition, DnClassesSplitExactlyWhenAllEvenAndMuEmpty) {
    for (int n = 1; n <= 10; ++n) {
        std::size_t even_mu = 0, split = 0;
        for (const auto& b : bipartitions_of(n)) {
            if (b.mu_length() % 2 != 0) continue;
            ++even_mu;
            if (b.mu().empty() && b.lambda().all_parts_even()) ++split;
        }
        auto classes = dn_classes(n);
        EXPECT_EQ(classes.size(), even_mu + split) << n;
        for (const auto& c : classes) EXPECT_EQ(DnClass::is_split(c.bip()), c.sign() != DnSign::none);
    }
    EXPECT_THROW(DnClass(Bipartition(Partition({2, 2}), Partition{})), std::invalid_argument);
    EXPECT_THROW(DnClass(Bipartition(Partition({1}), Partition({1})), DnSign::plus), std::invalid_argument);
    EXPECT_THROW(DnClass(Bipartition(Partition({1}), Partition({1}))), std::invalid_argument);
}

TEST(Predicates, SymmetricMatchesBruteForceSquares) {
    for (int n = 1; n <= 7; ++n) {
        auto squares = oracle::square_types_sym(n);
        for (const auto& p : partitions_of(n)) EXPECT_EQ(has_sqrt_A(p), squares.count(p.parts()) > 0) << n;
    }
}

TEST(Predicates, HyperoctahedralMatchesBruteForceSquares) {
    for (int n = 1; n <= 5; ++n) {
        auto squares = oracle::square_types_signed(n, false);
        for (const auto& b : bipartitions_of(n))
            EXPECT_EQ(has_sqrt_B(b), squares.count({b.lambda().parts(), b.mu().parts()}) > 0) << format_bipartition(b);
    }
}

TEST(Predicates, DemihyperoctahedralMatchesBruteForceSquares) {
    for (int n = 1; n <= 5; ++n) {
        auto squares = oracle::square_types_signed(n, true);
        for (const auto& c : dn_classes(n))
            EXPECT_EQ(has_sqrt_D(c), squares.count({c.bip().lambda().parts(), c.bip().mu().parts()}) > 0)
                << format_dn_class(c);
    }
    EXPECT_THROW(DnClass(Bipartition(Partition({1}), Partition({1})), DnSign::none), std::invalid_argument);
}

TEST(Predicates, GeneralAgreesWithSpecialCases) {
    for (int n = 0; n <= 7; ++n) {
        for (const auto& p : partitions_of(n)) {
            auto t = RPartiteType::single(1, 0, p);
            EXPECT_EQ(has_sqrt_Grn(t), has_sqrt_A(p));
        }
        for (const auto& b : bipartitions_of(n)) {
            EXPECT_EQ(has_sqrt_Grn(b), has_sqrt_B(b));
            EXPECT_EQ(has_abs_sqrt_Grn(b), has_sqrt_B(b));
        }
    }
}

TEST(Bijections, FIsBijectionOntoPartsNotTwoModFour) {
    for (int n = 1; n <= 16; ++n) {
        std::set<Partition> image;
        std::size_t domain = 0;
        for (const auto& p : partitions_of(n)) {
            if (!has_sqrt_A(p)) {
                EXPECT_THROW(bijection_f(p), std::domain_error);
                continue;
            }
            ++domain;
            auto q = bijection_f(p);
            EXPECT_EQ(q.size(), n);
            for (int part : q.parts()) EXPECT_NE(part % 4, 2);
            image.insert(q);
        }
        std::size_t target = 0;
        for (const auto& p : partitions_of(n))
            target += std::none_of(p.parts().begin(), p.parts().end(), [](int x) { return x % 4 == 2; });
        EXPECT_EQ(image.size(), domain);
        EXPECT_EQ(image.size(), target);
    }
}

TEST(Bijections, GIsBijectionOntoEvenPartitions) {
    for (int n = 1; n <= 16; ++n) {
        std::set<Partition> image;
        std::size_t domain = 0;
        for (const auto& p : partitions_of(n)) {
            bool paired = std::all_of(p.blocks().begin(), p.blocks().end(),
                                      [](const Partition::Block& b) { return b.multiplicity % 2 == 0; });
            if (!paired) {
                EXPECT_THROW(bijection_g(p), std::domain_error);
                continue;
            }
            ++domain;
            auto q = bijection_g(p);
            EXPECT_TRUE(q.all_parts_even());
            image.insert(q);
        }
        EXPECT_EQ(image.size(), domain);
        EXPECT_EQ(image.size(), n % 2 ? 0u : partitions_of(n / 2).size());
    }
}

TEST(TextFormat, PartitionGrammar) {
    EXPECT_EQ(parse_partition("3,2,2"), Partition({3, 2, 2}));
    EXPECT_EQ(parse_partition("1^2 2^3"), Partition({2, 2, 2, 1, 1}));
    EXPECT_EQ(parse_partition("-"), Partition{});
    EXPECT_THROW(parse_partition("3,,1"), std::invalid_argument);
    EXPECT_THROW(parse_partition("0"), std::invalid_argument);
    EXPECT_THROW(parse_partition("a"), std::invalid_argument);
}

TEST(TextFormat, RoundTripsEveryShape) {
    for (int n = 0; n <= 7; ++n) {
        for (const auto& p : partitions_of(n)) EXPECT_EQ(parse_partition(format_partition(p)), p);
        for (const auto& b : bipartitions_of(n)) EXPECT_EQ(parse_bipartition(format_bipartition(b)), b);
        if (n > 0)
            for (const auto& c : dn_classes(n)) EXPECT_EQ(parse_dn_class(format_dn_class(c)), c);
        for (int r = 1; r <= 4; ++r)
            for (const auto& t : r_partite_types(r, std::min(n, 5))) {
                EXPECT_EQ(parse_r_partite(format_r_partite(t)), t);
                EXPECT_EQ(parse_r_partite(format_r_partite(t), r), t);
            }
    }
}

TEST(TextFormat, ExamplesFromTheGrammar) {
    auto t = parse_r_partite("r=3: 2|1,1|-");
    EXPECT_EQ(t.r(), 3);
    EXPECT_EQ(t.component(1), Partition({1, 1}));
    EXPECT_EQ(format_r_partite(t), "r=3: 2|1,1|-");
    EXPECT_EQ(parse_dn_class("2,2|-+").sign(), DnSign::plus);
    EXPECT_EQ(parse_dn_class("2,2|--").sign(), DnSign::minus);
    EXPECT_EQ(parse_dn_class("1,1|-").sign(), DnSign::none);
    EXPECT_THROW(parse_dn_class("2,2|-"), std::invalid_argument);
    EXPECT_THROW(parse_r_partite("2|1"), std::invalid_argument);
    EXPECT_THROW(parse_r_partite("r=2: 2|1|1"), std::invalid_argument);
}

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "colsum/group_oracle.hpp"
#include "colsum/root_counts.hpp"
#include "colsum/text_format.hpp"
#include "oracles.hpp"

using namespace colsum;

namespace {

ColoredPermutation random_element(std::mt19937& rng, int r, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n)), colors(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::uniform_int_distribution<int> c(0, r - 1);
    for (auto& x : colors) x = c(rng);
    return ColoredPermutation(r, colors, perm);
}

const std::vector<GroupSpec>& small_specs() {
    static const std::vector<GroupSpec> specs = {
        GroupSpec::symmetric(5),      GroupSpec::hyperoctahedral(4), GroupSpec::general(3, 1, 3),
        GroupSpec::general(4, 1, 3),  GroupSpec::dihedral(5),        GroupSpec::dihedral(8),
        GroupSpec::general(5, 1, 2),
    };
    return specs;
}

}  // namespace

TEST(ColoredPermutation, GroupAxiomsOnRandomElements) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        int r = 1 + trial % 5, n = 1 + trial % 6;
        auto a = random_element(rng, r, n), b = random_element(rng, r, n), c = random_element(rng, r, n);
        auto e = ColoredPermutation::identity(r, n);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * a.inverse(), e);
        EXPECT_EQ(a.inverse() * a, e);
        EXPECT_EQ(a * e, a);
        EXPECT_EQ((a * b).bar(), a.bar() * b.bar());
        EXPECT_EQ((a * b).color_sum(), (a.color_sum() + b.color_sum()) % r);
        EXPECT_EQ(a.conjugate_by(b).cycle_type(), a.cycle_type());
    }
}

TEST(ColoredPermutation, ProductRuleOnSmallExample) {
    // (z; s)(z'; s') = (z + z' o s^{-1}; s s')
    ColoredPermutation x(3, {1, 0, 2}, {1, 2, 0});
    ColoredPermutation y(3, {2, 2, 0}, {0, 2, 1});
    auto p = x * y;
    EXPECT_EQ(p.perm(), (std::vector<int>{1, 0, 2}));
    // s^{-1} = (2, 0, 1): colours[j] = z_j + z'_{s^{-1}(j)}
    EXPECT_EQ(p.colors(), (std::vector<int>{(1 + 0) % 3, (0 + 2) % 3, (2 + 2) % 3}));
}

TEST(ColoredPermutation, RejectsMalformedInput) {
    EXPECT_THROW(ColoredPermutation(2, {0, 2}, {0, 1}), std::invalid_argument);
    EXPECT_THROW(ColoredPermutation(2, {0, 0}, {0, 0}), std::invalid_argument);
    EXPECT_THROW(ColoredPermutation(2, {0}, {0, 1}), std::invalid_argument);
}

TEST(GroupStream, EnumeratesEachElementOnce) {
    for (const auto& spec : {GroupSpec::symmetric(4), GroupSpec::hyperoctahedral(3), GroupSpec::demihyperoctahedral(4),
                             GroupSpec::general(4, 2, 3), GroupSpec::dihedral(6)}) {
        std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
        for (const auto& x : group_elements(spec)) {
            EXPECT_EQ(x.color_sum() % spec.q, 0);
            seen.insert({x.perm(), x.colors()});
        }
        EXPECT_EQ(ExactInt(static_cast<unsigned long>(seen.size())), spec.order()) << spec.name();
    }
}

TEST(GroupStream, BudgetAndDegreeLimits) {
    EXPECT_THROW(group_elements(GroupSpec::symmetric(8), 1000), BudgetExceeded);
    EXPECT_THROW(GroupSpec::symmetric(kMaxOracleDegree + 1).validate(), BudgetExceeded);
    EXPECT_THROW(GroupSpec::general(4, 3, 2).validate(), std::invalid_argument);
}

TEST(Census, SerialAndParallelAgree) {
    for (const auto& spec : small_specs()) {
        EXPECT_EQ(census_serial(spec, RootKind::square), census_parallel(spec, RootKind::square)) << spec.name();
        if (spec.q == 1)
            EXPECT_EQ(census_serial(spec, RootKind::absolute), census_parallel(spec, RootKind::absolute))
                << spec.name();
    }
}

TEST(Census, ClassSizesAndRootsConserveMass) {
    for (const auto& spec : small_specs()) {
        if (spec.family == GroupFamily::Dihedral) continue;
        for (auto kind : {RootKind::square, RootKind::absolute}) {
            auto census = census_parallel(spec, kind);
            ExactInt elements = 0, squares = 0;
            for (const auto& [t, c] : census) {
                elements += c.class_size;
                squares += c.class_size * c.roots;
            }
            EXPECT_EQ(elements, spec.order()) << spec.name();
            EXPECT_EQ(squares, spec.order()) << spec.name();
        }
    }
}

TEST(Census, SymmetricAgreesWithNaiveOracle) {
    for (int n = 1; n <= 6; ++n) {
        auto census = square_census(GroupSpec::symmetric(n));
        auto brute = oracle::sym_roots(n);
        for (const auto& [t, c] : census) EXPECT_EQ(c.roots, brute.at(t.component(0).parts()));
    }
}

TEST(Census, RootsAreClassFunctions) {
    std::mt19937 rng(5);
    auto spec = GroupSpec::general(3, 1, 3);
    for (const auto& t : r_partite_types(3, 3)) {
        auto w = representative(t);
        ASSERT_EQ(w.cycle_type(), t);
        ExactInt base = count_roots(spec, w, RootKind::square);
        ExactInt base_abs = count_roots(spec, w, RootKind::absolute);
        EXPECT_EQ(base, gamma_sqrt_Grn(t)) << format_r_partite(t);
        EXPECT_EQ(base_abs, gamma_abs_Grn(t)) << format_r_partite(t);
        for (int k = 0; k < 3; ++k) {
            auto g = random_element(rng, 3, 3);
            auto c = w.conjugate_by(g);
            EXPECT_EQ(count_roots(spec, c, RootKind::square), base);
            EXPECT_EQ(count_roots(spec, c, RootKind::absolute), base_abs);
        }
    }
}

TEST(Census, RepresentativesHaveTheirType) {
    for (int r = 1; r <= 4; ++r)
        for (int n = 0; n <= 5; ++n)
            for (const auto& t : r_partite_types(r, n)) EXPECT_EQ(representative(t).cycle_type(), t);
}

TEST(DnCensus, SerialAndParallelAgreeAndMatchFormula) {
    for (int n = 1; n <= 5; ++n) {
        auto par = dn_census(n);
        EXPECT_EQ(par, dn_census_serial(n));
        EXPECT_EQ(par.size(), dn_classes(n).size());
        for (const auto& [cls, roots] : par) EXPECT_EQ(roots, gamma_D(cls)) << format_dn_class(cls);
    }
}

TEST(DnCensus, SplitRepresentativesAreNotConjugateInDn) {
    for (int n = 2; n <= 6; n += 2) {
        auto sums = conj_class_sums(GroupSpec::demihyperoctahedral(n), RootKind::square);
        EXPECT_EQ(sums.classes, dn_classes(n).size()) << n;
    }
    auto plus = representative(parse_dn_class("2,2|-+"));
    auto minus = representative(parse_dn_class("2,2|--"));
    EXPECT_EQ(plus.cycle_type(), minus.cycle_type());
    bool conjugate = false;
    for (const auto& g : group_elements(GroupSpec::demihyperoctahedral(4)))
        if (plus.conjugate_by(g) == minus) conjugate = true;
    EXPECT_FALSE(conjugate);
}

TEST(ClassTable, CyclicTypesGiveTheClasses) {
    for (const auto& spec : {GroupSpec::symmetric(5), GroupSpec::hyperoctahedral(3), GroupSpec::general(3, 1, 3)}) {
        ColoredGroupModel model(spec);
        auto table = class_table(model, RootKind::square);
        EXPECT_EQ(ExactInt(static_cast<unsigned long>(table.size())), r_partite_count(spec.r, spec.n));
        ExactInt total = 0;
        for (const auto& c : table) {
            total += c.size;
            EXPECT_EQ(c.roots, gamma_sqrt_Grn(model.unrank(c.representative).cycle_type()));
        }
        EXPECT_EQ(total, spec.order());
    }
}

TEST(ClassSums, KnownSmallGroups) {
    auto s4 = conj_class_sums(GroupSpec::symmetric(4), RootKind::square);
    EXPECT_EQ(s4.s, 13);
    EXPECT_EQ(s4.gamma_e, 10);
    EXPECT_FALSE(s4.abelian());
    auto c5 = conj_class_sums(GroupSpec::general(5, 1, 1));
    EXPECT_TRUE(c5.abelian());
    EXPECT_EQ(c5.s, c5.gamma_e);
    auto q = conj_class_sums(GroupSpec::general(4, 4, 2));  // dih(4) as a G(r,r,2)
    EXPECT_EQ(q.s, 8);
    EXPECT_EQ(q.gamma_e, 6);
}

TEST(ClassSums, CharacterSemantics) {
    auto g = GroupSpec::general(9, 3, 3);
    EXPECT_THROW(conj_class_sums(g, RootKind::absolute, true), CharacterSemanticsError);
    auto stats = conj_class_sums(g, RootKind::absolute, false);
    EXPECT_FALSE(stats.character_sums);
    EXPECT_TRUE(conj_class_sums(GroupSpec::general(6, 2, 3), RootKind::absolute, true).character_sums);
    EXPECT_FALSE(column_sum_semantics(GroupSpec::general(3, 1, 2), RootKind::square));
    EXPECT_TRUE(column_sum_semantics(GroupSpec::general(3, 1, 2), RootKind::absolute));
}

TEST(ClassSums, ProductGroupsMultiply) {
    auto a = std::make_shared<ColoredGroupModel>(GroupSpec::symmetric(3));
    auto b = std::make_shared<ColoredGroupModel>(GroupSpec::general(3, 1, 2));
    ProductGroupModel p(a, b);
    auto sa = conj_class_sums(*a, RootKind::absolute), sb = conj_class_sums(*b, RootKind::absolute);
    auto sp = conj_class_sums(p, RootKind::absolute);
    EXPECT_EQ(sp.s, sa.s * sb.s);
    EXPECT_EQ(sp.gamma_e, sa.gamma_e * sb.gamma_e);
    EXPECT_EQ(sp.classes, sa.classes * sb.classes);
    EXPECT_EQ(sp.order, sa.order * sb.order);
}

TEST(Dihedral, FormulaEqualsOracle) {
    for (int n = 3; n <= 16; ++n) {
        EXPECT_EQ(dihedral_table(n), dihedral_oracle(n, RootKind::square)) << n;
        EXPECT_EQ(dihedral_table(n), dihedral_oracle(n, RootKind::absolute)) << n;
    }
    EXPECT_THROW(dihedral_table(2), std::invalid_argument);
}

TEST(Dihedral, WeylGroupOfOrderTwelve) {
    auto d = dihedral_oracle(6);
    EXPECT_EQ(d.gamma_e, 8);
    EXPECT_EQ(d.s, 10);
}

// The order-10 dihedral group has 6 involution-or-identity elements and
// column total 8; a tabulated (32, 40) for it cannot be right.
TEST(Dihedral, OrderTenValues) {
    auto d = dihedral_oracle(5);
    EXPECT_EQ(d.gamma_e, 6);
    EXPECT_EQ(d.s, 8);
    EXPECT_NE(d.gamma_e, 32);
}

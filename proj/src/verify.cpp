#include "colsum/verify.hpp"

#include <cmath>
#include <memory>
#include <numeric>
#include <sstream>

#include "colsum/group_oracle.hpp"
#include "colsum/partition.hpp"
#include "colsum/root_counts.hpp"
#include "colsum/sequence_cache.hpp"
#include "colsum/text_format.hpp"

namespace colsum {

bool VerificationReport::passed() const {
    for (const auto& c : checks)
        if (!c.informational && !c.passed) return false;
    return true;
}

const CheckRecord* VerificationReport::find(const std::string& id) const {
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

void VerificationReport::append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

std::string dec(const ExactInt& v) { return to_decimal(v); }

// Accumulates one check; the first failure (smallest n, loops run upward) is kept.
class Check {
public:
    Check(std::string id, std::string statement, int from, int to, bool informational = false) {
        rec_.id = std::move(id);
        rec_.statement = std::move(statement);
        rec_.n_from = from;
        rec_.n_to = to;
        rec_.informational = informational;
    }

    void expect(bool ok, const std::string& witness) {
        ++evaluated_;
        if (!ok && rec_.passed) {
            rec_.passed = false;
            rec_.witness = witness;
        }
        if (ok) last_ok_ = witness;
    }

    CheckRecord done() {
        if (rec_.passed)
            rec_.witness = std::to_string(evaluated_) + " cases" + (last_ok_.empty() ? "" : "; last " + last_ok_);
        return rec_;
    }

private:
    CheckRecord rec_;
    int evaluated_ = 0;
    std::string last_ok_;
};

ExactInt central_ratio(int n) {  // n!/(n/2)! for even n
    return exact_divide(factorial(n), factorial(n / 2), "n!/(n/2)!");
}

struct Sequences {
    std::vector<ExactInt> sA, sA_conv, sB, sB_conv, sD, iA, iB, iD, gA, gB;
};

Sequences gather(const IdentityRanges& rg, const SequenceCache* cache) {
    Sequences s;
    const int nA = std::max({rg.sum_bound_A, rg.refined_A_n, rg.invol_A_n, rg.term_bound_A_n, rg.convolution_n});
    const int nB = std::max({rg.sum_bound_B, rg.refined_B_n, rg.invol_B_n, rg.term_bound_B_n, rg.convolution_n,
                             rg.bd_odd_n, rg.d_total_bound_n, rg.invol_diff_n});
    const int nD = std::max({rg.sum_bound_D, rg.bd_odd_n, rg.d_total_bound_n});
    s.sA = cached_table_sum(cache, Family::A, 1, nA, Method::direct).values;
    s.sA_conv = cached_table_sum(cache, Family::A, 1, rg.convolution_n, Method::convolution).values;
    s.sB = cached_table_sum(cache, Family::B, 2, nB, Method::direct).values;
    s.sB_conv = cached_table_sum(cache, Family::B, 2, rg.convolution_n, Method::convolution).values;
    s.sD = cached_table_sum(cache, Family::D, 2, nD, Method::direct).values;
    s.iA = cached_involutions(cache, Family::A, 1, nA).values;
    s.iB = cached_involutions(cache, Family::B, 2, nB).values;
    s.iD = cached_involutions(cache, Family::D, 2, std::max(nB, nD)).values;
    s.gA = cached_g(cache, Family::A, nA).values;
    s.gB = cached_g(cache, Family::B, nB).values;
    return s;
}

}  // namespace

VerificationReport verify_identities(const IdentityRanges& rg, const SequenceCache* cache) {
    VerificationReport rep;
    rep.suite = "identities";
    const Sequences q = gather(rg, cache);

    for (auto [fam, s, conv] : {std::tuple{"A", &q.sA, &q.sA_conv}, std::tuple{"B", &q.sB, &q.sB_conv}}) {
        Check c(std::string("convolution.") + fam,
                std::string("s_n") + (fam[0] == 'B' ? "^B" : "") + " = sum_k i_k g_{n-k}", 0, rg.convolution_n);
        for (int n = 0; n <= rg.convolution_n; ++n)
            c.expect((*s)[n] == (*conv)[n], "n=" + std::to_string(n) + ": direct " + dec((*s)[n]) +
                                                " vs convolution " + dec((*conv)[n]));
        rep.checks.push_back(c.done());
    }

    {
        Check c("b-twice-d.total", "s_n^B = 2 s_n^D for odd n", 1, rg.bd_odd_n);
        for (int n = 1; n <= rg.bd_odd_n; n += 2)
            c.expect(q.sB[n] == 2 * q.sD[n], "n=" + std::to_string(n) + ": s^B=" + dec(q.sB[n]) + ", 2 s^D=" +
                                                 dec(ExactInt(2 * q.sD[n])));
        rep.checks.push_back(c.done());
    }

    {
        Check c("b-vs-d.involutions", "2 i_n^D - i_n^B = n!/(n/2)! (n even), 0 (n odd)", 1, rg.invol_diff_n);
        for (int n = 1; n <= rg.invol_diff_n; ++n) {
            ExactInt lhs = 2 * q.iD[n] - q.iB[n];
            ExactInt rhs = n % 2 == 0 ? central_ratio(n) : ExactInt(0);
            c.expect(lhs == rhs, "n=" + std::to_string(n) + ": " + dec(lhs) + " vs " + dec(rhs));
        }
        rep.checks.push_back(c.done());
    }

    {
        auto sum_bound = [&](const std::string& fam, const std::vector<ExactInt>& s, const std::vector<ExactInt>& i,
                              int max_n) {
            Check c("sum-le-2gamma." + fam, "s <= 2 Gamma_e for " + fam + "_n", 1, max_n);
            for (int n = 1; n <= max_n; ++n)
                c.expect(s[n] <= 2 * i[n], "n=" + std::to_string(n) + ": s=" + dec(s[n]) + ", Gamma_e=" + dec(i[n]));
            rep.checks.push_back(c.done());
        };
        sum_bound("A", q.sA, q.iA, rg.sum_bound_A);
        sum_bound("B", q.sB, q.iB, rg.sum_bound_B);
        sum_bound("D", q.sD, q.iD, rg.sum_bound_D);
        Check c("sum-le-2gamma.dih", "s <= 2 Gamma_e for dih(n)", 3, rg.sum_bound_dih);
        for (int n = 3; n <= rg.sum_bound_dih; ++n) {
            auto t = dihedral_table(n);
            c.expect(t.s <= 2 * t.gamma_e, "n=" + std::to_string(n) + ": s=" + dec(t.s) + ", Gamma_e=" + dec(t.gamma_e));
        }
        rep.checks.push_back(c.done());
    }

    {
        auto sn = [&](int from, int to, bool info) {
            Check c(info ? "refined-bound.A-below-threshold" : "refined-bound.A", "s_n <= i_n + i_{n-1}", from, to, info);
            for (int n = from; n <= to; ++n)
                c.expect(q.sA[n] <= q.iA[n] + q.iA[n - 1], "n=" + std::to_string(n) + ": s=" + dec(q.sA[n]) +
                                                             ", i_n + i_{n-1}=" + dec(ExactInt(q.iA[n] + q.iA[n - 1])));
            rep.checks.push_back(c.done());
        };
        sn(1, 3, true);
        sn(4, rg.refined_A_n, false);
        auto bn = [&](int from, int to, bool info) {
            Check c(info ? "refined-bound.B-below-threshold" : "refined-bound.B", "s_n^B <= i_n^B + 2 i_{n-1}^B + 2 i_{n-2}^B",
                    from, to, info);
            for (int n = from; n <= to; ++n) {
                ExactInt rhs = q.iB[n] + 2 * q.iB[n - 1] + 2 * q.iB[n - 2];
                c.expect(q.sB[n] <= rhs, "n=" + std::to_string(n) + ": s^B=" + dec(q.sB[n]) + ", bound=" + dec(rhs));
            }
            rep.checks.push_back(c.done());
        };
        bn(2, 5, true);
        bn(6, rg.refined_B_n, false);
    }

    {
        Check c("involution-ratio.A", "2 i_{n-1} <= i_n <= n i_{n-1}", 2, rg.invol_A_n);
        for (int n = 2; n <= rg.invol_A_n; ++n)
            c.expect(2 * q.iA[n - 1] <= q.iA[n] && q.iA[n] <= n * q.iA[n - 1],
                     "n=" + std::to_string(n) + ": i_n=" + dec(q.iA[n]) + ", i_{n-1}=" + dec(q.iA[n - 1]));
        rep.checks.push_back(c.done());

        Check r("involution-ratio.B", "sqrt(2n) <= i_n^B / i_{n-1}^B <= sqrt(2n) + 2 (squared form)", 1,
                rg.invol_B_n);
        for (int n = 1; n <= rg.invol_B_n; ++n) {
            const ExactInt& a = q.iB[n];
            const ExactInt& b = q.iB[n - 1];
            bool lower = a * a >= 2 * n * b * b;
            ExactInt excess = a - 2 * b;  // upper bound: a - 2b <= sqrt(2n) b
            bool upper = excess <= 0 || excess * excess <= 2 * n * b * b;
            r.expect(lower && upper, "n=" + std::to_string(n) + ": i_n^B=" + dec(a) + ", i_{n-1}^B=" + dec(b));
        }
        rep.checks.push_back(r.done());

        Check f("involution-first.B", "4 i_{n-1}^B <= i_n^B <= n i_{n-1}^B", 5, rg.invol_B_n);
        for (int n = 5; n <= rg.invol_B_n; ++n)
            f.expect(4 * q.iB[n - 1] <= q.iB[n] && q.iB[n] <= n * q.iB[n - 1],
                     "n=" + std::to_string(n) + ": i_n^B=" + dec(q.iB[n]) + ", i_{n-1}^B=" + dec(q.iB[n - 1]));
        rep.checks.push_back(f.done());
    }

    {
        Check c("term-bound.A", "(n-2) i_k g_{n-k} <= i_{n-1} for 0 <= k <= n-3", 4, rg.term_bound_A_n);
        for (int n = 4; n <= rg.term_bound_A_n; ++n)
            for (int k = 0; k <= n - 3; ++k)
                c.expect((n - 2) * q.iA[k] * q.gA[n - k] <= q.iA[n - 1],
                         "n=" + std::to_string(n) + ", k=" + std::to_string(k) + ": i_k g_{n-k}=" +
                             dec(ExactInt(q.iA[k] * q.gA[n - k])) + ", i_{n-1}=" + dec(q.iA[n - 1]));
        rep.checks.push_back(c.done());

        Check b("term-bound.B", "(n-2) i_k^B g_{n-k}^B <= 2 i_{n-1}^B for 0 <= k <= n-3", 6,
                rg.term_bound_B_n);
        for (int n = 6; n <= rg.term_bound_B_n; ++n)
            for (int k = 0; k <= n - 3; ++k)
                b.expect((n - 2) * q.iB[k] * q.gB[n - k] <= 2 * q.iB[n - 1],
                         "n=" + std::to_string(n) + ", k=" + std::to_string(k) + ": i_k^B g_{n-k}^B=" +
                             dec(ExactInt(q.iB[k] * q.gB[n - k])) + ", i_{n-1}^B=" + dec(q.iB[n - 1]));
        rep.checks.push_back(b.done());
    }

    {
        Check c("d-total-bound", "s_n^D <= i_n^D + (s_n^B - i_n^B) + g_n^B", 1, rg.d_total_bound_n);
        for (int n = 1; n <= rg.d_total_bound_n; ++n) {
            ExactInt rhs = q.iD[n] + (q.sB[n] - q.iB[n]) + q.gB[n];
            c.expect(q.sD[n] <= rhs, "n=" + std::to_string(n) + ": s^D=" + dec(q.sD[n]) + ", bound=" + dec(rhs));
        }
        rep.checks.push_back(c.done());
    }

    {
        Check c("sum-ge-gamma", "s >= Gamma_e, equality iff abelian, G(r,q,n) with gcd(q,n) <= 2", 1, rg.lower_bound_n_max);
        int groups = 0, abelian = 0;
        for (int r = 1; r <= rg.lower_bound_r_max; ++r)
            for (int qq = 1; qq <= r; ++qq) {
                if (r % qq != 0) continue;
                for (int n = 1; n <= rg.lower_bound_n_max; ++n) {
                    if (std::gcd(qq, n) > 2) continue;
                    auto spec = GroupSpec::general(r, qq, n);
                    if (spec.order() > ExactInt(static_cast<unsigned long>(rg.lower_bound_budget))) continue;
                    auto sums = conj_class_sums(spec, RootKind::absolute, true, rg.lower_bound_budget);
                    ++groups;
                    abelian += sums.abelian() ? 1 : 0;
                    bool ok = sums.s >= sums.gamma_e && ((sums.s == sums.gamma_e) == sums.abelian());
                    c.expect(ok, spec.name() + ": s=" + dec(sums.s) + ", Gamma_e=" + dec(sums.gamma_e) +
                                     ", classes=" + std::to_string(sums.classes) + ", |G|=" + dec(sums.order));
                }
            }
        auto rec = c.done();
        if (rec.passed)
            rec.witness = std::to_string(groups) + " groups (" + std::to_string(abelian) + " abelian, all with s = Gamma_e)";
        rep.checks.push_back(rec);
    }

    {
        Check c("product", "s(G1 x G2) = s(G1) s(G2), Gamma_e likewise", -1, -1);
        std::vector<std::pair<GroupSpec, GroupSpec>> pairs = {
            {GroupSpec::symmetric(3), GroupSpec::symmetric(3)},
            {GroupSpec::hyperoctahedral(2), GroupSpec::symmetric(3)},
            {GroupSpec::general(3, 1, 1), GroupSpec::symmetric(4)},
            {GroupSpec::general(4, 2, 2), GroupSpec::general(3, 1, 1)},
            {GroupSpec::dihedral(5), GroupSpec::hyperoctahedral(2)},
            {GroupSpec::demihyperoctahedral(3), GroupSpec::dihedral(4)},
        };
        for (const auto& [g1, g2] : pairs) {
            auto m1 = std::make_shared<ColoredGroupModel>(g1);
            auto m2 = std::make_shared<ColoredGroupModel>(g2);
            auto a = conj_class_sums(*m1, RootKind::absolute);
            auto b = conj_class_sums(*m2, RootKind::absolute);
            ProductGroupModel prod(m1, m2);
            auto p = conj_class_sums(prod, RootKind::absolute);
            c.expect(p.s == a.s * b.s && p.gamma_e == a.gamma_e * b.gamma_e,
                     prod.name() + ": s=" + dec(p.s) + " vs " + dec(ExactInt(a.s * b.s)) + ", Gamma_e=" +
                         dec(p.gamma_e) + " vs " + dec(ExactInt(a.gamma_e * b.gamma_e)));
        }
        rep.checks.push_back(c.done());
    }
    return rep;
}

VerificationReport verify_oracle_equivalence(const OracleRanges& rg) {
    VerificationReport rep;
    rep.suite = "oracle";

    auto compare_census = [&](Check& c, const GroupSpec& spec, RootKind kind) {
        auto census = kind == RootKind::square ? square_census(spec) : abs_square_census(spec);
        std::size_t types = 0;
        for_each_r_partite(spec.r, spec.n, [&](const RPartiteView& v) {
            ++types;
            auto t = v.materialize();
            ExactInt formula = kind == RootKind::square ? gamma_sqrt_Grn(t) : gamma_abs_Grn(t);
            bool predicate = kind == RootKind::square ? has_sqrt_Grn(t) : has_abs_sqrt_Grn(t);
            auto it = census.find(t);
            ExactInt brute = it == census.end() ? ExactInt(0) : it->second.roots;
            c.expect(formula == brute && predicate == (brute > 0),
                     spec.name() + " " + format_r_partite(t) + ": formula " + dec(formula) + ", oracle " + dec(brute) +
                         ", predicate " + (predicate ? "true" : "false"));
        });
        c.expect(types == census.size(), spec.name() + ": " + std::to_string(census.size()) + " census types vs " +
                                             std::to_string(types) + " enumerated");
    };

    {
        Check c("oracle.S_n", "gamma_A = brute-force square roots, every class", 1, rg.sym_n);
        for (int n = 1; n <= rg.sym_n; ++n) compare_census(c, GroupSpec::symmetric(n), RootKind::square);
        rep.checks.push_back(c.done());
    }
    {
        Check c("oracle.B_n", "gamma_B = brute-force square roots and absolute roots, every class", 1, rg.hyper_n);
        for (int n = 1; n <= rg.hyper_n; ++n) {
            compare_census(c, GroupSpec::hyperoctahedral(n), RootKind::square);
            compare_census(c, GroupSpec::hyperoctahedral(n), RootKind::absolute);
        }
        rep.checks.push_back(c.done());
    }
    {
        Check c("oracle.D_n", "gamma_D = brute-force square roots, every class incl. both split signs", 1, rg.demi_n);
        for (int n = 1; n <= rg.demi_n; ++n) {
            auto census = dn_census(n);
            for (const auto& [cls, brute] : census) {
                ExactInt formula = gamma_D(cls);
                c.expect(formula == brute && has_sqrt_D(cls) == (brute > 0),
                         "D_" + std::to_string(n) + " " + format_dn_class(cls) + ": formula " + dec(formula) +
                             ", oracle " + dec(brute));
            }
        }
        rep.checks.push_back(c.done());
    }
    {
        Check c("oracle.G(3,1,n)", "gamma_sqrt / gamma_abs = brute force on G(3,1,n)", 1, rg.g3_n);
        for (int n = 1; n <= rg.g3_n; ++n) {
            compare_census(c, GroupSpec::general(3, 1, n), RootKind::square);
            compare_census(c, GroupSpec::general(3, 1, n), RootKind::absolute);
        }
        rep.checks.push_back(c.done());
    }
    if (rg.g4_3) {
        Check c("oracle.G(4,1,3)", "gamma_sqrt / gamma_abs = brute force on G(4,1,3)", 3, 3);
        compare_census(c, GroupSpec::general(4, 1, 3), RootKind::square);
        compare_census(c, GroupSpec::general(4, 1, 3), RootKind::absolute);
        rep.checks.push_back(c.done());
    }
    {
        Check c("oracle.dihedral", "(Gamma_e, s) of dih(n) from the case formulas = oracle on G(n,n,2)", 3,
                rg.dihedral_n);
        for (int n = 3; n <= rg.dihedral_n; ++n) {
            auto f = dihedral_table(n);
            auto sq = dihedral_oracle(n, RootKind::square);
            auto ab = dihedral_oracle(n, RootKind::absolute);
            c.expect(f == sq && f == ab, "n=" + std::to_string(n) + ": formula (" + dec(f.gamma_e) + ", " + dec(f.s) +
                                             "), square roots (" + dec(sq.gamma_e) + ", " + dec(sq.s) +
                                             "), absolute roots (" + dec(ab.gamma_e) + ", " + dec(ab.s) + ")");
        }
        rep.checks.push_back(c.done());
    }
    {
        Check c("oracle.r2-coincidence", "gamma_abs = gamma_sqrt on every type of G(2,1,n)", 0, rg.r2_coincidence_n);
        for (int n = 0; n <= rg.r2_coincidence_n; ++n)
            for_each_r_partite(2, n, [&](const RPartiteView& v) {
                ExactInt a = gamma_abs_Grn(v), s = gamma_sqrt_Grn(v);
                c.expect(a == s, format_r_partite(v.materialize()) + ": abs " + dec(a) + ", sqrt " + dec(s));
            });
        rep.checks.push_back(c.done());
    }
    return rep;
}

bool AsymptoticReport::passed() const {
    for (const auto& r : rows)
        if (!r.lower_ok || !r.upper_ok) return false;
    return true;
}

AsymptoticReport asymptotic_report(Family family, int max_n, const SequenceCache* cache) {
    AsymptoticReport rep;
    rep.family = family;
    if (family == Family::A) {
        rep.bound = "1 <= s_n/i_n <= 1 + 1/sqrt(n)";
        rep.n_from = 4;
    } else if (family == Family::B) {
        rep.bound = "1 <= s_n^B/i_n^B <= 1 + 4/sqrt(2n)";
        rep.n_from = 6;
    } else {
        throw std::invalid_argument("asymptotic sandwich is defined for families A and B");
    }
    const int r = family == Family::A ? 1 : 2;
    auto s = cached_table_sum(cache, family, r, max_n, Method::direct).values;
    auto i = cached_involutions(cache, family, r, max_n).values;
    for (int n = rep.n_from; n <= max_n; ++n) {
        AsymptoticRow row;
        row.n = n;
        row.ratio = Rational(s[n], i[n]);
        row.ratio.canonicalize();
        row.approx = row.ratio.get_d();
        row.lower_ok = s[n] >= i[n];
        ExactInt excess = s[n] - i[n];
        if (family == Family::A) {
            // (s - i)/i <= 1/sqrt(n)  <=>  n (s - i)^2 <= i^2
            row.upper_ok = excess * excess * n <= i[n] * i[n];
            row.reference = 1.0 + 1.0 / std::sqrt(static_cast<double>(n));
        } else {
            // (s - i)/i <= 4/sqrt(2n)  <=>  2n (s - i)^2 <= 16 i^2
            row.upper_ok = excess * excess * (2 * n) <= 16 * i[n] * i[n];
            row.reference = 1.0 + 4.0 / std::sqrt(2.0 * n);
        }
        rep.rows.push_back(row);
    }
    return rep;
}

AsymptoticReport asymptotic_report_dihedral(int max_n) {
    AsymptoticReport rep;
    rep.family = Family::D;  // unused for dih; kept for the row type
    rep.bound = "|s/Gamma_e - 3/2| <= 3/n";
    rep.n_from = 20;
    for (int n = rep.n_from; n <= max_n; ++n) {
        auto t = dihedral_table(n);
        AsymptoticRow row;
        row.n = n;
        row.ratio = Rational(t.s, t.gamma_e);
        row.ratio.canonicalize();
        row.approx = row.ratio.get_d();
        row.reference = 1.5;
        ExactInt gap = 2 * t.s - 3 * t.gamma_e;
        if (gap < 0) gap = -gap;
        // |2s - 3G| / (2G) <= 3/n  <=>  n |2s - 3G| <= 6 G
        row.upper_ok = gap * n <= 6 * t.gamma_e;
        rep.rows.push_back(row);
    }
    return rep;
}

VerificationReport verify_asymptotics(int max_n_A, int max_n_B, int max_n_dih, const SequenceCache* cache) {
    VerificationReport rep;
    rep.suite = "asymptotics";
    auto add = [&](const std::string& id, const AsymptoticReport& a) {
        Check c(id, a.bound, a.n_from, a.rows.empty() ? a.n_from : a.rows.back().n);
        for (const auto& row : a.rows) {
            std::ostringstream w;
            w << "n=" << row.n << ": ratio " << to_string(row.ratio) << " (~" << row.approx << ")";
            c.expect(row.lower_ok && row.upper_ok, w.str());
        }
        rep.checks.push_back(c.done());
    };
    add("asymptotic.A-sandwich", asymptotic_report(Family::A, max_n_A, cache));
    add("asymptotic.B-sandwich", asymptotic_report(Family::B, max_n_B, cache));
    add("asymptotic.dih-ratio", asymptotic_report_dihedral(max_n_dih));
    return rep;
}

}  // namespace colsum

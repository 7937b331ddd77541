#include "colsum/sequences.hpp"

#include <chrono>
#include <stdexcept>

#include "colsum/group_oracle.hpp"
#include "colsum/kernels.hpp"
#include "colsum/partition.hpp"
#include "colsum/root_counts.hpp"

namespace colsum {

Family parse_family(std::string_view text) {
    if (text == "A") return Family::A;
    if (text == "B") return Family::B;
    if (text == "D") return Family::D;
    if (text == "G") return Family::G;
    if (text == "Gsq") return Family::Gsq;
    throw std::invalid_argument("unknown family '" + std::string(text) + "' (expected A, B, D, G or Gsq)");
}

std::string to_string(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::D: return "D";
        case Family::G: return "G";
        case Family::Gsq: return "Gsq";
    }
    return "?";
}

int family_r(Family f, int r) {
    switch (f) {
        case Family::A: return 1;
        case Family::B:
        case Family::D: return 2;
        case Family::G:
        case Family::Gsq:
            if (r < 1) throw std::invalid_argument("family G needs r >= 1");
            return r;
    }
    return r;
}

Method parse_method(std::string_view text) {
    if (text == "direct") return Method::direct;
    if (text == "gf") return Method::gf;
    if (text == "convolution") return Method::convolution;
    if (text == "oracle") return Method::oracle;
    throw std::invalid_argument("unknown method '" + std::string(text) + "' (expected direct, gf, convolution, oracle)");
}

std::string to_string(Method m) {
    switch (m) {
        case Method::direct: return "direct";
        case Method::gf: return "gf";
        case Method::convolution: return "convolution";
        case Method::oracle: return "oracle";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void check_max_n(int max_n) {
    if (max_n < 0) throw std::invalid_argument("max n must be >= 0");
}

bool is_split_view(const RPartiteView& v) {
    return v.component(1).empty() && !v.component(0).empty() && v.component(0).all_parts_even();
}

ExactInt direct_weight(Family family, const RPartiteView& v) {
    switch (family) {
        case Family::A:
        case Family::B:
        case Family::Gsq: return gamma_sqrt_Grn(v);
        case Family::G: return gamma_abs_Grn(v);
        case Family::D: {
            if (v.component(1).length() % 2 != 0) return 0;
            ExactInt g = gamma_D_blocks(v);
            return is_split_view(v) ? ExactInt(2 * g) : g;
        }
    }
    return 0;
}

ExactInt direct_sum(Family family, int r, int n, const PartitionTable& table, bool serial) {
    auto weight = [family](const RPartiteView& v) { return direct_weight(family, v); };
    return serial ? sum_over_types_serial(r, n, table, weight) : sum_over_types(r, n, table, weight);
}

// Sum_{j} s_j x^{jk} through x^order; s must reach order/k.
Series stretch(const Series& s, int k, int order) {
    Series out(order);
    for (int j = 0; j * k <= order; ++j) out[j * k] = s[j];
    return out;
}

Series named_stretched(NamedSeries name, const ExactInt& scale, const Rational& r, int k, int order) {
    return stretch(named_series(name, scale, r, order / k), k, order);
}

Series gf_G_abs(int r, int order) {
    Series out = Series::one(order);
    const unsigned pairs = r % 2 == 1 ? static_cast<unsigned>((r - 1) / 2) : static_cast<unsigned>((r - 2) / 2);
    for (int k = 1; k <= order; ++k) {
        if (pairs > 0 && 2 * k <= order)
            out *= named_stretched(NamedSeries::F, ExactInt(k) * r, 0, 2 * k, order).pow(pairs);
        if (4 * k <= order) out *= named_stretched(NamedSeries::D, ExactInt(2 * k) * r, 0, 4 * k, order);
        if (r % 2 == 0 && 2 * k <= order) out *= named_stretched(NamedSeries::D, ExactInt(k) * r, 0, 2 * k, order);
        const int len = 2 * k - 1;
        if (len <= order) out *= named_stretched(NamedSeries::R, ExactInt(r), make_rational(len, r), len, order);
    }
    return out;
}

Series gf_G_sqrt(int r, int order) {
    Series out = Series::one(order);
    const auto ur = static_cast<unsigned>(r);
    for (int k = 1; k <= order; ++k) {
        if (4 * k <= order) out *= named_stretched(NamedSeries::D, ExactInt(2 * k) * r, 0, 4 * k, order).pow(ur);
        const int len = 2 * k - 1;
        if (r % 2 == 1) {
            if (len <= order) out *= named_stretched(NamedSeries::R, 1, Rational(r * len), len, order).pow(ur);
        } else {
            if (4 * k - 2 <= order)
                out *= named_stretched(NamedSeries::D, ExactInt(len) * r, 0, 4 * k - 2, order).pow(ur / 2);
            if (len <= order) out *= named_stretched(NamedSeries::R, 2, make_rational(r * len, 4), len, order).pow(ur / 2);
        }
    }
    return out;
}

ZSeries to_zseries(const Series& s) {
    ZSeries out(s.order());
    for (int k = 0; k <= s.order(); ++k) out[k] = ZPair(s[k]);
    return out;
}

Series gf_D(int order) {
    ZSeries z = ZSeries::one(order);
    Series split_extra = Series::one(order);
    for (int k = 1; k <= order; ++k) {
        if (4 * k <= order) {
            Series d = named_stretched(NamedSeries::D, 4 * k, 0, 4 * k, order);
            z *= to_zseries(d);
            split_extra *= d;
        }
        if (2 * k <= order) {
            // D(2k z x^{2k}): the j-th term carries z^j.
            Series d = named_series(NamedSeries::D, 2 * k, 0, order / (2 * k));
            ZSeries dz(order);
            for (int j = 0; j * 2 * k <= order; ++j) dz[j * 2 * k] = j % 2 == 0 ? ZPair(d[j], 0) : ZPair(0, d[j]);
            z *= dz;
        }
        const int len = 2 * k - 1;
        if (len <= order) {
            // R_{2 len}(x, z) as a J-fraction over Z[z]/(z^2 - 1).
            ZSeries rz = jfraction<ZPair>([](int) -> ZPair { return ZPair(1, 1); },
                                          [len](int h) -> ZPair { return ZPair(ExactInt(2 * len) * (h + 1)); }, order / len);
            ZSeries st(order);
            for (int j = 0; j * len <= order; ++j) st[j * len] = rz[j];
            z *= st;
        }
    }
    Series out(order);
    for (int k = 0; k <= order; ++k) out[k] = z[k].filter();
    out += split_extra;
    out[0] -= 1;
    return out;
}

std::vector<ExactInt> involutions_A(int max_n) {
    std::vector<ExactInt> i(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) i[n] = n <= 1 ? ExactInt(1) : ExactInt(i[n - 1] + (n - 1) * i[n - 2]);
    return i;
}

std::vector<ExactInt> involutions_B(int max_n) {
    std::vector<ExactInt> i(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n)
        i[n] = n == 0 ? ExactInt(1) : n == 1 ? ExactInt(2) : ExactInt(2 * i[n - 1] + 2 * (n - 1) * i[n - 2]);
    return i;
}

bool no_fixed_points(const RPartiteView& v) { return v.component(0).multiplicity(1) == 0; }

}  // namespace

SequenceReport seq_involutions(Family family, int r, int max_n) {
    check_max_n(max_n);
    const auto t0 = Clock::now();
    SequenceReport rep;
    rep.family = family;
    rep.r = family_r(family, r);
    rep.method = Method::direct;
    rep.quantity = "involutions";
    switch (family) {
        case Family::A: rep.values = involutions_A(max_n); break;
        case Family::B: rep.values = involutions_B(max_n); break;
        case Family::D: {
            auto ib = involutions_B(max_n);
            for (int n = 0; n <= max_n; ++n) {
                ExactInt extra = n % 2 == 0 ? exact_divide(factorial(n), factorial(n / 2), "n!/(n/2)!") : ExactInt(0);
                rep.values.push_back(exact_divide(ib[n] + extra, 2, "i_n^D"));
            }
            break;
        }
        case Family::G:
        case Family::Gsq:
            for (int n = 0; n <= max_n; ++n) {
                auto id = RPartiteType::single(rep.r, 0, Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
                rep.values.push_back(family == Family::G ? gamma_abs_Grn(id) : gamma_sqrt_Grn(id));
            }
            break;
    }
    rep.seconds = seconds_since(t0);
    return rep;
}

SequenceReport seq_g(Family family, int max_n) {
    check_max_n(max_n);
    if (family != Family::A && family != Family::B)
        throw std::invalid_argument("derangement-type sums are defined for families A and B");
    const auto t0 = Clock::now();
    SequenceReport rep;
    rep.family = family;
    rep.r = family_r(family, 1);
    rep.method = Method::direct;
    rep.quantity = "derangement";
    PartitionTable table(max_n);
    for (int n = 0; n <= max_n; ++n)
        rep.values.push_back(sum_over_types(rep.r, n, table, [](const RPartiteView& v) {
            return no_fixed_points(v) ? gamma_sqrt_Grn(v) : ExactInt(0);
        }));
    rep.seconds = seconds_since(t0);
    return rep;
}

Series total_sum_gf(Family family, int r, int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    switch (family) {
        case Family::A: return gf_G_abs(1, order);
        case Family::B: return gf_G_abs(2, order);
        case Family::G: return gf_G_abs(family_r(family, r), order);
        case Family::Gsq: return gf_G_sqrt(family_r(family, r), order);
        case Family::D: return gf_D(order);
    }
    throw std::logic_error("unhandled family");
}

ExactInt table_sum_direct(Family family, int r, int n, bool serial) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    PartitionTable table(n);
    return direct_sum(family, family_r(family, r), n, table, serial);
}

SequenceReport seq_table_sum(Family family, int r, int max_n, Method method) {
    check_max_n(max_n);
    const auto t0 = Clock::now();
    SequenceReport rep;
    rep.family = family;
    rep.r = family_r(family, r);
    rep.method = method;
    rep.quantity = "total";
    switch (method) {
        case Method::direct: {
            PartitionTable table(max_n);
            for (int n = 0; n <= max_n; ++n) rep.values.push_back(direct_sum(family, rep.r, n, table, false));
            break;
        }
        case Method::gf: rep.values = total_sum_gf(family, rep.r, max_n).coefficients(); break;
        case Method::convolution: {
            if (family != Family::A && family != Family::B)
                throw std::invalid_argument("the convolution route exists for families A and B only");
            auto i = seq_involutions(family, rep.r, max_n).values;
            auto g = seq_g(family, max_n).values;
            for (int n = 0; n <= max_n; ++n) {
                ExactInt s = 0;
                for (int k = 0; k <= n; ++k) s += i[k] * g[n - k];
                rep.values.push_back(s);
            }
            break;
        }
        case Method::oracle: {
            for (int n = 0; n <= max_n; ++n) {
                if (n == 0) {
                    rep.values.push_back(1);
                    continue;
                }
                GroupSpec spec;
                RootKind kind = RootKind::square;
                switch (family) {
                    case Family::A: spec = GroupSpec::symmetric(n); break;
                    case Family::B: spec = GroupSpec::hyperoctahedral(n); break;
                    case Family::D: spec = GroupSpec::demihyperoctahedral(n); break;
                    case Family::G:
                        spec = GroupSpec::general(rep.r, 1, n);
                        kind = RootKind::absolute;
                        break;
                    case Family::Gsq: spec = GroupSpec::general(rep.r, 1, n); break;
                }
                rep.values.push_back(conj_class_sums(spec, kind).s);
            }
            break;
        }
    }
    rep.seconds = seconds_since(t0);
    return rep;
}

namespace {

std::uint64_t class_multiplicity(Family family, const RPartiteView& v) {
    if (family != Family::D) return 1;
    if (v.component(1).length() % 2 != 0) return 0;
    return is_split_view(v) ? 2 : 1;
}

bool nonzero_column(Family family, const RPartiteView& v) {
    switch (family) {
        case Family::A: return has_sqrt_A(v.component(0));
        case Family::B: return has_sqrt_B(Bipartition(v.component(0), v.component(1)));
        case Family::D: return has_sqrt_D(DnClass(Bipartition(v.component(0), v.component(1)),
                                                  is_split_view(v) ? DnSign::plus : DnSign::none));
        case Family::G: return has_abs_sqrt_Grn(v);
        case Family::Gsq: return has_sqrt_Grn(v);
    }
    return false;
}

}  // namespace

ExactInt class_count(Family family, int r, int n) {
    const int rr = family_r(family, r);
    if (family != Family::D) return r_partite_count(rr, n);
    PartitionTable table(n);
    return ExactInt(static_cast<unsigned long>(
        count_types(rr, n, table, [](const RPartiteView& v) { return class_multiplicity(Family::D, v); })));
}

Series nonzero_columns_gf(Family family, int r, int order) {
    const int rr = family_r(family, r);
    std::vector<ProductFactor> f;
    auto minus = [&](int a, int m, int e) {
        if (e > 0) f.push_back({a, m, e, FactorSign::minus});
    };
    switch (family) {
        case Family::A:
        case Family::B:
        case Family::G: {
            minus(-1, 2, 1);
            minus(0, 4, 1);
            // Mirror pairs lambda^t = lambda^{r-t} occupy 2|lambda^t| letters.
            minus(0, 2, rr % 2 == 1 ? (rr - 1) / 2 : (rr - 2) / 2);
            if (rr % 2 == 0) minus(0, 2, 1);
            return partition_product(f, order);
        }
        case Family::Gsq: {
            const int even_colors = rr % 2 == 1 ? rr : rr / 2;
            minus(-1, 2, even_colors);
            minus(0, 4, even_colors);
            if (rr % 2 == 0) minus(0, 2, rr / 2);
            return partition_product(f, order);
        }
        case Family::D: {
            const ProductFactor p4[] = {{0, 4, 1, FactorSign::minus}};
            const ProductFactor p2[] = {{0, 2, 1, FactorSign::minus}};
            const ProductFactor podd[] = {{-1, 2, 1, FactorSign::minus}};
            Series P4 = partition_product(p4, order);
            Series odd_nonempty = partition_product(podd, order) - Series::one(order);
            Series inner = partition_product(p2, order) * odd_nonempty + even_length_partitions(2, order) +
                           Series::one(order);
            Series out = P4 * inner;
            out[0] -= 1;
            return out;
        }
    }
    throw std::logic_error("unhandled family");
}

ZeroColumnCount zero_column_count(Family family, int r, int n, bool gf_check) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    const int rr = family_r(family, r);
    PartitionTable table(n);
    ZeroColumnCount out;
    std::uint64_t classes = count_types(rr, n, table, [&](const RPartiteView& v) { return class_multiplicity(family, v); });
    std::uint64_t nonzero = count_types(rr, n, table, [&](const RPartiteView& v) {
        std::uint64_t m = class_multiplicity(family, v);
        return m > 0 && nonzero_column(family, v) ? m : 0;
    });
    out.classes = ExactInt(static_cast<unsigned long>(classes));
    out.zero = ExactInt(static_cast<unsigned long>(classes - nonzero));
    if (gf_check) out.zero_gf = out.classes - nonzero_columns_gf(family, rr, n)[n];
    return out;
}

}  // namespace colsum

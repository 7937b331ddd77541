#include "colsum/series.hpp"

#include <stdexcept>

#include "colsum/root_counts.hpp"

namespace colsum {

NamedSeries parse_named_series(std::string_view name) {
    if (name == "D") return NamedSeries::D;
    if (name == "F") return NamedSeries::F;
    if (name == "I") return NamedSeries::I;
    if (name == "R") return NamedSeries::R;
    throw std::invalid_argument("unknown series '" + std::string(name) + "' (expected D, F, I or R)");
}

std::string to_string(NamedSeries s) {
    switch (s) {
        case NamedSeries::D: return "D";
        case NamedSeries::F: return "F";
        case NamedSeries::I: return "I";
        case NamedSeries::R: return "R";
    }
    return "?";
}

Series named_series_closed_form(NamedSeries name, const ExactInt& scale, const Rational& r, int order) {
    Series out(order);
    ExactInt scale_n = 1;
    for (int n = 0; n <= order; ++n) {
        ExactInt base;
        switch (name) {
            case NamedSeries::D: base = double_factorial(2 * n - 1); break;
            case NamedSeries::F: base = factorial(n); break;
            case NamedSeries::I: base = o_r(n, ExactInt(1)); break;
            case NamedSeries::R: {
                // o_r(n) scale^n is integral even when o_r(n) alone is not.
                Rational v = 0;
                Rational rk = 1;
                for (int k = 0; 2 * k <= n; ++k) {
                    v += Rational(binomial(n, 2 * k) * double_factorial(2 * k - 1)) * rk;
                    rk *= r;
                }
                out[n] = to_integer(v * Rational(scale_n), "R_" + to_string(r) + " coefficient " + std::to_string(n));
                scale_n *= scale;
                continue;
            }
        }
        out[n] = base * scale_n;
        scale_n *= scale;
    }
    return out;
}

Series named_series_fraction(NamedSeries name, const ExactInt& scale, const Rational& r, int order) {
    switch (name) {
        case NamedSeries::D:
            return sfraction<ExactInt>([&](int h) -> ExactInt { return ExactInt(h + 1) * scale; }, order);
        case NamedSeries::F:
            return sfraction<ExactInt>([&](int h) -> ExactInt { return ExactInt((h + 2) / 2) * scale; }, order);
        case NamedSeries::I:
            return jfraction<ExactInt>([&](int) -> ExactInt { return scale; },
                                       [&](int h) -> ExactInt { return ExactInt(h + 1) * scale * scale; },
                                       order);
        case NamedSeries::R: {
            const Rational qs(scale);
            RationalSeries s = jfraction<Rational>([&](int) -> Rational { return qs; },
                                                   [&](int h) -> Rational { return Rational(h + 1) * r * qs * qs; }, order);
            Series out(order);
            for (int k = 0; k <= order; ++k)
                out[k] = to_integer(s[k], "R_" + to_string(r) + " continued-fraction coefficient " + std::to_string(k));
            return out;
        }
    }
    throw std::logic_error("unhandled series");
}

Series named_series(NamedSeries name, const ExactInt& scale, const Rational& r, int order, bool cross_check) {
    Series closed = named_series_closed_form(name, scale, r, order);
    if (cross_check) {
        Series frac = named_series_fraction(name, scale, r, order);
        if (!(frac == closed))
            throw std::logic_error("continued fraction and closed form disagree for series " + to_string(name));
    }
    return closed;
}

Series r_series_xy_fraction(const ExactInt& r, const ExactInt& y, int order) {
    return jfraction<ExactInt>([&](int) -> ExactInt { return 1 + y; },
                               [&](int h) -> ExactInt { return ExactInt(h + 1) * r; }, order);
}

Series r_series_xy_closed_form(const ExactInt& r, const ExactInt& y, int order) {
    Series out(order);
    for (int m = 0; m <= order; ++m) out[m] = o_ry(m, Rational(r), y);
    return out;
}

Series partition_product(std::span<const ProductFactor> factors, int order) {
    Series c = Series::one(order);
    for (const auto& f : factors) {
        if (f.modulus < 1) throw std::invalid_argument("partition_product: modulus must be positive");
        if (f.modulus + f.residue < 1) throw std::invalid_argument("partition_product: first exponent must be positive");
        const int sgn = f.sign == FactorSign::minus ? 1 : -1;
        for (int k = f.modulus + f.residue; k <= order; k += f.modulus) {
            for (int e = 0; e < f.exponent; ++e)  // divide by (1 - sgn q^k)
                for (int i = k; i <= order; ++i) c[i] += sgn * c[i - k];
            for (int e = 0; e < -f.exponent; ++e)  // multiply by (1 - sgn q^k)
                for (int i = order; i >= k; --i) c[i] -= sgn * c[i - k];
        }
    }
    return c;
}

Series even_length_partitions(int step, int order) {
    const ProductFactor all_minus[] = {{0, step, 1, FactorSign::minus}};
    const ProductFactor all_plus[] = {{0, step, 1, FactorSign::plus}};
    Series sum = partition_product(all_minus, order) + partition_product(all_plus, order);
    Series out(order);
    for (int k = 0; k <= order; ++k) out[k] = exact_divide(sum[k], 2, "even_length_partitions");
    return out;
}

std::vector<std::string> to_decimal_strings(const Series& s) {
    std::vector<std::string> out;
    out.reserve(s.coefficients().size());
    for (const auto& c : s.coefficients()) out.push_back(to_decimal(c));
    return out;
}

}  // namespace colsum

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "colsum/exact.hpp"
#include "colsum/zpair.hpp"

namespace colsum {

// Truncated power series sum_{k<=N} c_k x^k + O(x^{N+1}) over an exact ring
// (ExactInt, Rational or ZPair).
template <class T>
class BasicSeries {
public:
    explicit BasicSeries(int order) : c_(checked_size(order), T(0)) {}
    explicit BasicSeries(std::vector<T> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("series needs at least a constant term");
    }

    static BasicSeries constant(const T& v, int order) {
        BasicSeries s(order);
        s.c_[0] = v;
        return s;
    }
    static BasicSeries one(int order) { return constant(T(1), order); }
    static BasicSeries monomial(const T& v, int k, int order) {
        BasicSeries s(order);
        if (k <= order) s.c_[static_cast<std::size_t>(k)] = v;
        return s;
    }

    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const T& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
    T& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
    const std::vector<T>& coefficients() const noexcept { return c_; }

    BasicSeries truncated(int order) const {
        if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
        return BasicSeries(std::vector<T>(c_.begin(), c_.begin() + order + 1));
    }

    BasicSeries& operator+=(const BasicSeries& o) {
        shrink_to(o.order());
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    BasicSeries& operator-=(const BasicSeries& o) {
        shrink_to(o.order());
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    friend BasicSeries operator+(BasicSeries a, const BasicSeries& b) { return a += b; }
    friend BasicSeries operator-(BasicSeries a, const BasicSeries& b) { return a -= b; }
    friend BasicSeries operator-(BasicSeries a) {
        for (auto& v : a.c_) v = -v;
        return a;
    }
    friend BasicSeries operator*(const BasicSeries& a, const BasicSeries& b) { return multiply(a, b); }
    BasicSeries& operator*=(const BasicSeries& o) { return *this = multiply(*this, o); }

    BasicSeries scaled(const T& v) const {
        BasicSeries out = *this;
        for (auto& x : out.c_) x *= v;
        return out;
    }

    // Coefficientwise parallel product; each output coefficient is owned by one
    // thread and summed in index order, so the result does not depend on the
    // thread count.
    static BasicSeries multiply(const BasicSeries& a, const BasicSeries& b) {
        const int n = std::min(a.order(), b.order());
        BasicSeries out(n);
#pragma omp parallel for schedule(dynamic, 4) if (n >= kParallelOrder)
        for (int k = 0; k <= n; ++k) {
            T acc(0);
            for (int i = 0; i <= k; ++i) {
                if (is_zero(a.c_[i])) continue;
                acc += a.c_[i] * b.c_[k - i];
            }
            out.c_[k] = std::move(acc);
        }
        return out;
    }

    static BasicSeries multiply_serial(const BasicSeries& a, const BasicSeries& b) {
        const int n = std::min(a.order(), b.order());
        BasicSeries out(n);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
        return out;
    }

    BasicSeries inverse() const {
        auto inv0 = unit_inverse(c_[0]);
        if (!inv0) throw std::domain_error("series inverse needs a unit constant term");
        BasicSeries out(order());
        out.c_[0] = *inv0;
        for (int k = 1; k <= order(); ++k) {
            T acc(0);
            for (int i = 1; i <= k; ++i) {
                if (is_zero(c_[i])) continue;
                acc += c_[i] * out.c_[k - i];
            }
            out.c_[k] = -(*inv0 * acc);
        }
        return out;
    }

    // x -> c * x^k.
    BasicSeries substitute(const T& c, int k) const {
        if (k < 1) throw std::invalid_argument("substitution x -> c x^k needs k >= 1");
        BasicSeries out(order());
        T cj(1);
        for (int j = 0; j * k <= order(); ++j) {
            out.c_[static_cast<std::size_t>(j * k)] = c_[j] * cj;
            cj *= c;
        }
        return out;
    }

    BasicSeries pow(unsigned e) const {
        BasicSeries result = one(order());
        BasicSeries base = *this;
        while (e) {
            if (e & 1u) result *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return result;
    }

    friend bool operator==(const BasicSeries& a, const BasicSeries& b) { return a.c_ == b.c_; }

    static constexpr int kParallelOrder = 48;

private:
    static std::size_t checked_size(int order) {
        if (order < 0) throw std::invalid_argument("series order must be nonnegative");
        return static_cast<std::size_t>(order) + 1;
    }
    static bool is_zero(const T& v) { return v == T(0); }
    void shrink_to(int order) {
        if (order < this->order()) c_.resize(static_cast<std::size_t>(order) + 1);
    }

    std::vector<T> c_;
};

using Series = BasicSeries<ExactInt>;
using RationalSeries = BasicSeries<Rational>;
using ZSeries = BasicSeries<ZPair>;

template <class T>
using CoefficientFn = std::function<T(int)>;

// Depth needed for a J-fraction to be exact through x^N.
inline int jfraction_depth(int order) { return (order + 1) / 2 + 1; }

// J(x) = 1/(1 - tau_0 x - rho_0 x^2/(1 - tau_1 x - rho_1 x^2/(...))), evaluated
// bottom-up from J_depth = 1.
template <class T>
BasicSeries<T> jfraction(const CoefficientFn<T>& tau, const CoefficientFn<T>& rho, int order,
                         std::optional<int> depth = std::nullopt) {
    const int d = depth.value_or(jfraction_depth(order));
    using S = BasicSeries<T>;
    S tail = S::one(order);
    for (int h = d - 1; h >= 0; --h) {
        S denom = S::one(order);
        if (order >= 1) denom[1] -= tau(h);
        S shifted(order);
        T rh = rho(h);
        for (int k = 0; k + 2 <= order; ++k) shifted[k + 2] = rh * tail[k];
        denom -= shifted;
        tail = denom.inverse();
    }
    return tail;
}

// S(x) = 1/(1 - rho_0 x/(1 - rho_1 x/(...))), one power of x per level.
template <class T>
BasicSeries<T> sfraction(const CoefficientFn<T>& rho, int order, std::optional<int> depth = std::nullopt) {
    const int d = depth.value_or(order + 1);
    using S = BasicSeries<T>;
    S tail = S::one(order);
    for (int h = d - 1; h >= 0; --h) {
        S denom = S::one(order);
        T rh = rho(h);
        for (int k = 0; k + 1 <= order; ++k) denom[k + 1] -= rh * tail[k];
        tail = denom.inverse();
    }
    return tail;
}

template <class T>
BasicSeries<T> jfraction(const std::vector<T>& tau, const std::vector<T>& rho, int order) {
    auto at = [](const std::vector<T>& v) {
        return [&v](int h) { return h < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(h)] : T(0); };
    };
    return jfraction<T>(at(tau), at(rho), order);
}

// The named series of the column-sum generating functions:
//   D(x) = sum (2n-1)!! x^n,  F(x) = sum n! x^n,  I(x) = sum i_n x^n,
//   R_r(x) = sum o_r(n) x^n.
enum class NamedSeries { D, F, I, R };

NamedSeries parse_named_series(std::string_view name);
std::string to_string(NamedSeries s);

// Closed-form coefficients of S(scale * x) (r only used for R).
Series named_series_closed_form(NamedSeries name, const ExactInt& scale, const Rational& r, int order);
// The same series through its continued fraction (rational arithmetic for R).
Series named_series_fraction(NamedSeries name, const ExactInt& scale, const Rational& r, int order);
// Closed form, cross-checked against the continued fraction when requested.
Series named_series(NamedSeries name, const ExactInt& scale, const Rational& r, int order, bool cross_check = true);

// R_r(x, y) = sum o_r(m, y) x^m, through J-fraction tau = 1+y, rho_h = (h+1) r.
Series r_series_xy_fraction(const ExactInt& r, const ExactInt& y, int order);
Series r_series_xy_closed_form(const ExactInt& r, const ExactInt& y, int order);

enum class FactorSign { minus, plus };

// prod_{j>=1} (1 - s q^{m j + a})^{-e}: s = +1 for FactorSign::minus, -1 for plus.
struct ProductFactor {
    int residue;
    int modulus;
    int exponent;
    FactorSign sign = FactorSign::minus;
};

Series partition_product(std::span<const ProductFactor> factors, int order);

// Partitions into parts from {step, 2 step, ...} with an even number of parts:
// (prod 1/(1 - q^{step j}) + prod 1/(1 + q^{step j})) / 2.
Series even_length_partitions(int step, int order);

std::vector<std::string> to_decimal_strings(const Series& s);

}  // namespace colsum

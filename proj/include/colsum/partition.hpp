#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "colsum/exact.hpp"

namespace colsum {

// An integer partition. The part list (weakly decreasing) is what we order and
// print by; the block list (distinct parts, descending, with multiplicities)
// is what the counting formulas consume.
class Partition {
public:
    struct Block {
        int part;
        int multiplicity;
        friend bool operator==(const Block&, const Block&) = default;
    };

    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition from_unsorted(std::vector<int> parts);
    // Blocks may come in any order and may repeat a part; zero multiplicities are dropped.
    static Partition from_blocks(std::span<const Block> blocks);

    const std::vector<int>& parts() const noexcept { return parts_; }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int multiplicity(int part) const noexcept;

    bool has_odd_part() const noexcept;
    bool all_parts_even() const noexcept;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    std::vector<Block> blocks_;
    int size_ = 0;
};

// Streams the partitions of n (parts bounded by max_part) in reverse-lex order.
class PartitionStream {
public:
    explicit PartitionStream(int n, std::optional<int> max_part = std::nullopt);
    std::optional<Partition> next();

private:
    std::vector<int> current_;
    bool done_ = false;
    bool first_ = true;
};

std::vector<Partition> partitions_of(int n);

// All partitions of 0..max_n, each size in canonical order. Enumerators over
// tuples of partitions point into one of these instead of copying.
class PartitionTable {
public:
    explicit PartitionTable(int max_n);
    int max_n() const noexcept { return static_cast<int>(by_size_.size()) - 1; }
    const std::vector<Partition>& of_size(int k) const { return by_size_.at(static_cast<std::size_t>(k)); }

private:
    std::vector<std::vector<Partition>> by_size_;
};

class Bipartition {
public:
    Bipartition() = default;
    Bipartition(Partition lambda, Partition mu) : lambda_(std::move(lambda)), mu_(std::move(mu)) {}

    const Partition& lambda() const noexcept { return lambda_; }
    const Partition& mu() const noexcept { return mu_; }
    int size() const noexcept { return lambda_.size() + mu_.size(); }
    int mu_length() const noexcept { return mu_.length(); }

    // Uniform access shared with RPartiteType (color 0 = lambda, color 1 = mu).
    int r() const noexcept { return 2; }
    const Partition& component(int t) const { return t == 0 ? lambda_ : mu_; }

    friend bool operator==(const Bipartition&, const Bipartition&) = default;
    friend auto operator<=>(const Bipartition&, const Bipartition&) = default;

private:
    Partition lambda_;
    Partition mu_;
};

class RPartiteType {
public:
    RPartiteType() = default;
    RPartiteType(int r, std::vector<Partition> comps);
    static RPartiteType single(int r, int color, Partition p);
    static RPartiteType from(const Bipartition& b);

    int r() const noexcept { return r_; }
    int size() const noexcept { return size_; }
    const Partition& component(int t) const { return comps_.at(static_cast<std::size_t>(t)); }
    const std::vector<Partition>& components() const noexcept { return comps_; }

    friend bool operator==(const RPartiteType& a, const RPartiteType& b) {
        return a.r_ == b.r_ && a.comps_ == b.comps_;
    }
    friend std::strong_ordering operator<=>(const RPartiteType& a, const RPartiteType& b) {
        if (auto c = a.r_ <=> b.r_; c != 0) return c;
        return a.comps_ <=> b.comps_;
    }

private:
    int r_ = 1;
    std::vector<Partition> comps_{Partition{}};
    int size_ = 0;
};

// Non-owning r-partite type whose components live in a PartitionTable.
class RPartiteView {
public:
    RPartiteView(int r, std::span<const Partition* const> comps) : r_(r), comps_(comps) {}
    int r() const noexcept { return r_; }
    const Partition& component(int t) const { return *comps_[static_cast<std::size_t>(t)]; }
    int size() const noexcept;
    RPartiteType materialize() const;

private:
    int r_;
    std::span<const Partition* const> comps_;
};

template <class T>
concept CycleTypeLike = requires(const T& t, int i) {
    { t.r() } -> std::convertible_to<int>;
    { t.component(i) } -> std::convertible_to<const Partition&>;
};

enum class DnSign { none, plus, minus };

// A conjugacy class of D_n. Split classes ((lambda|empty), all parts even)
// carry a sign; every other class carries DnSign::none.
class DnClass {
public:
    DnClass(Bipartition bip, DnSign sign = DnSign::none);

    static bool is_split(const Bipartition& b) noexcept;

    const Bipartition& bip() const noexcept { return bip_; }
    DnSign sign() const noexcept { return sign_; }
    int size() const noexcept { return bip_.size(); }

    friend bool operator==(const DnClass&, const DnClass&) = default;
    friend auto operator<=>(const DnClass&, const DnClass&) = default;

private:
    Bipartition bip_;
    DnSign sign_;
};

// Weak compositions of n into r parts, lexicographically descending.
std::vector<std::vector<int>> weak_compositions(int n, int r);

std::vector<Bipartition> bipartitions_of(int n);
std::vector<RPartiteType> r_partite_types(int r, int n);
std::vector<DnClass> dn_classes(int n);

// Number of r-partite partitions of n (coefficient of P(q)^r).
ExactInt r_partite_count(int r, int n);

// Visits every r-partite type of size n once, in canonical order: size vectors
// descending, then reverse-lex in each component with colour 0 outermost.
template <class F>
void for_each_r_partite_in(int r, const std::vector<int>& sizes, const PartitionTable& table, F&& visit) {
    std::vector<const Partition*> slots(static_cast<std::size_t>(r));
    std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
    for (int t = 0; t < r; ++t) slots[t] = &table.of_size(sizes[t]).front();
    RPartiteView view(r, slots);
    while (true) {
        visit(static_cast<const RPartiteView&>(view));
        int t = r - 1;
        for (; t >= 0; --t) {
            const auto& pool = table.of_size(sizes[t]);
            if (++idx[t] < pool.size()) {
                slots[t] = &pool[idx[t]];
                break;
            }
            idx[t] = 0;
            slots[t] = &pool.front();
        }
        if (t < 0) return;
    }
}

template <class F>
void for_each_r_partite(int r, int n, const PartitionTable& table, F&& visit) {
    for (const auto& sizes : weak_compositions(n, r)) for_each_r_partite_in(r, sizes, table, visit);
}

template <class F>
void for_each_r_partite(int r, int n, F&& visit) {
    PartitionTable table(n);
    for_each_r_partite(r, n, table, visit);
}

// Squareness predicates.
bool has_sqrt_A(const Partition& p) noexcept;
bool has_sqrt_B(const Bipartition& b) noexcept;
bool has_sqrt_D(const DnClass& c);

namespace detail {
bool even_parts_paired(const Partition& p) noexcept;
bool all_parts_paired(const Partition& p) noexcept;
}  // namespace detail

template <CycleTypeLike T>
bool has_sqrt_Grn(const T& type) {
    const int r = type.r();
    for (int t = 0; t < r; ++t) {
        const Partition& p = type.component(t);
        bool ok = (r % 2 == 0 && t % 2 == 1) ? detail::all_parts_paired(p) : detail::even_parts_paired(p);
        if (!ok) return false;
    }
    return true;
}

template <CycleTypeLike T>
bool has_abs_sqrt_Grn(const T& type) {
    const int r = type.r();
    if (!detail::even_parts_paired(type.component(0))) return false;
    for (int t = 1; 2 * t < r; ++t)
        if (!(type.component(t) == type.component(r - t))) return false;
    if (r % 2 == 0 && r > 1 && !detail::all_parts_paired(type.component(r / 2))) return false;
    return true;
}

// f: keep odd parts, send a pair of parts 2i to one part 4i.
Partition bijection_f(const Partition& p);
// g: send a pair of parts i to one part 2i.
Partition bijection_g(const Partition& p);

}  // namespace colsum

#include "colsum/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace colsum {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
        if (blocks_.empty() || blocks_.back().part != parts_[i])
            blocks_.push_back({parts_[i], 1});
        else
            ++blocks_.back().multiplicity;
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::from_blocks(std::span<const Block> blocks) {
    std::map<int, int, std::greater<>> merged;
    for (const auto& b : blocks) {
        if (b.part <= 0) throw std::invalid_argument("partition parts must be positive");
        if (b.multiplicity < 0) throw std::invalid_argument("negative multiplicity");
        merged[b.part] += b.multiplicity;
    }
    std::vector<int> parts;
    for (auto [part, mult] : merged) parts.insert(parts.end(), static_cast<std::size_t>(mult), part);
    return Partition(std::move(parts));
}

int Partition::multiplicity(int part) const noexcept {
    for (const auto& b : blocks_)
        if (b.part == part) return b.multiplicity;
    return 0;
}

bool Partition::has_odd_part() const noexcept {
    return std::any_of(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.part % 2 == 1; });
}

bool Partition::all_parts_even() const noexcept {
    return std::all_of(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.part % 2 == 0; });
}

PartitionStream::PartitionStream(int n, std::optional<int> max_part) {
    if (n < 0) throw std::invalid_argument("cannot partition a negative number");
    int cap = max_part.value_or(n);
    if (cap <= 0 && n > 0) {
        done_ = true;
        return;
    }
    for (int rem = n; rem > 0; rem -= std::min(cap, rem)) current_.push_back(std::min(cap, rem));
}

std::optional<Partition> PartitionStream::next() {
    if (done_) return std::nullopt;
    if (first_) {
        first_ = false;
        return Partition(current_);
    }
    // Rightmost part above 1 drops by one; everything after it is refilled greedily.
    int k = static_cast<int>(current_.size()) - 1;
    while (k >= 0 && current_[k] == 1) --k;
    if (k < 0) {
        done_ = true;
        return std::nullopt;
    }
    int rem = static_cast<int>(current_.size()) - 1 - k + 1;
    int cap = --current_[k];
    current_.resize(static_cast<std::size_t>(k) + 1);
    while (rem > 0) {
        int part = std::min(cap, rem);
        current_.push_back(part);
        rem -= part;
    }
    return Partition(current_);
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    PartitionStream s(n);
    while (auto p = s.next()) out.push_back(std::move(*p));
    return out;
}

PartitionTable::PartitionTable(int max_n) {
    if (max_n < 0) throw std::invalid_argument("negative partition table size");
    by_size_.reserve(static_cast<std::size_t>(max_n) + 1);
    for (int k = 0; k <= max_n; ++k) by_size_.push_back(partitions_of(k));
}

RPartiteType::RPartiteType(int r, std::vector<Partition> comps) : r_(r), comps_(std::move(comps)) {
    if (r < 1) throw std::invalid_argument("r-partite type needs r >= 1");
    if (static_cast<int>(comps_.size()) != r)
        throw std::invalid_argument("r-partite type needs exactly r components (got " +
                                    std::to_string(comps_.size()) + " for r=" + std::to_string(r) + ")");
    for (const auto& p : comps_) size_ += p.size();
}

RPartiteType RPartiteType::single(int r, int color, Partition p) {
    if (color < 0 || color >= r) throw std::invalid_argument("colour out of range");
    std::vector<Partition> comps(static_cast<std::size_t>(r));
    comps[static_cast<std::size_t>(color)] = std::move(p);
    return RPartiteType(r, std::move(comps));
}

RPartiteType RPartiteType::from(const Bipartition& b) { return RPartiteType(2, {b.lambda(), b.mu()}); }

int RPartiteView::size() const noexcept {
    int s = 0;
    for (const auto* p : comps_) s += p->size();
    return s;
}

RPartiteType RPartiteView::materialize() const {
    std::vector<Partition> comps;
    comps.reserve(comps_.size());
    for (const auto* p : comps_) comps.push_back(*p);
    return RPartiteType(r_, std::move(comps));
}

bool DnClass::is_split(const Bipartition& b) noexcept {
    return b.mu().empty() && !b.lambda().empty() && b.lambda().all_parts_even();
}

DnClass::DnClass(Bipartition bip, DnSign sign) : bip_(std::move(bip)), sign_(sign) {
    if (bip_.mu_length() % 2 != 0)
        throw std::invalid_argument("not a D_n class: the negative part has an odd number of cycles");
    if (is_split(bip_) != (sign_ != DnSign::none))
        throw std::invalid_argument(is_split(bip_) ? "split D_n class needs a +/- sign"
                                                   : "only split D_n classes carry a sign");
}

std::vector<std::vector<int>> weak_compositions(int n, int r) {
    if (r < 1) throw std::invalid_argument("weak compositions need r >= 1");
    if (n < 0) throw std::invalid_argument("weak compositions of a negative number");
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(r), 0);
    std::function<void(int, int)> rec = [&](int t, int rem) {
        if (t == r - 1) {
            cur[t] = rem;
            out.push_back(cur);
            return;
        }
        for (int s = rem; s >= 0; --s) {
            cur[t] = s;
            rec(t + 1, rem - s);
        }
    };
    rec(0, n);
    return out;
}

std::vector<Bipartition> bipartitions_of(int n) {
    std::vector<Bipartition> out;
    PartitionTable table(n);
    for_each_r_partite(2, n, table, [&](const RPartiteView& v) {
        out.emplace_back(v.component(0), v.component(1));
    });
    return out;
}

std::vector<RPartiteType> r_partite_types(int r, int n) {
    std::vector<RPartiteType> out;
    for_each_r_partite(r, n, [&](const RPartiteView& v) { out.push_back(v.materialize()); });
    return out;
}

std::vector<DnClass> dn_classes(int n) {
    if (n < 1) throw std::invalid_argument("D_n needs n >= 1");
    std::vector<DnClass> out;
    for (auto& b : bipartitions_of(n)) {
        if (b.mu_length() % 2 != 0) continue;
        if (DnClass::is_split(b)) {
            out.emplace_back(b, DnSign::plus);
            out.emplace_back(b, DnSign::minus);
        } else {
            out.emplace_back(b, DnSign::none);
        }
    }
    return out;
}

ExactInt r_partite_count(int r, int n) {
    if (r < 1 || n < 0) throw std::invalid_argument("r_partite_count needs r >= 1, n >= 0");
    // p(k) by the standard coin-change recurrence, then r-fold convolution.
    std::vector<ExactInt> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int k = part; k <= n; ++k) p[k] += p[k - part];
    std::vector<ExactInt> acc(static_cast<std::size_t>(n) + 1, 0);
    acc[0] = 1;
    for (int t = 0; t < r; ++t) {
        std::vector<ExactInt> next(static_cast<std::size_t>(n) + 1, 0);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j) next[i + j] += acc[i] * p[j];
        acc = std::move(next);
    }
    return acc[static_cast<std::size_t>(n)];
}

namespace detail {

bool even_parts_paired(const Partition& p) noexcept {
    for (const auto& b : p.blocks())
        if (b.part % 2 == 0 && b.multiplicity % 2 != 0) return false;
    return true;
}

bool all_parts_paired(const Partition& p) noexcept {
    for (const auto& b : p.blocks())
        if (b.multiplicity % 2 != 0) return false;
    return true;
}

}  // namespace detail

bool has_sqrt_A(const Partition& p) noexcept { return detail::even_parts_paired(p); }

bool has_sqrt_B(const Bipartition& b) noexcept {
    return detail::even_parts_paired(b.lambda()) && detail::all_parts_paired(b.mu());
}

bool has_sqrt_D(const DnClass& c) {
    const auto& b = c.bip();
    if (b.mu_length() % 2 != 0) throw std::invalid_argument("has_sqrt_D: odd number of negative cycles");
    return has_sqrt_B(b) && (b.lambda().has_odd_part() || b.mu_length() % 4 == 0);
}

Partition bijection_f(const Partition& p) {
    if (!detail::even_parts_paired(p))
        throw std::domain_error("bijection_f: an even part has odd multiplicity");
    std::vector<Partition::Block> out;
    for (const auto& b : p.blocks()) {
        if (b.part % 2 == 1)
            out.push_back(b);
        else
            out.push_back({2 * b.part, b.multiplicity / 2});
    }
    return Partition::from_blocks(out);
}

Partition bijection_g(const Partition& p) {
    if (!detail::all_parts_paired(p)) throw std::domain_error("bijection_g: a part has odd multiplicity");
    std::vector<Partition::Block> out;
    for (const auto& b : p.blocks()) out.push_back({2 * b.part, b.multiplicity / 2});
    return Partition::from_blocks(out);
}

}  // namespace colsum

#include "colsum/group_oracle.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <utility>

#include <omp.h>

namespace colsum {

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec GroupSpec::symmetric(int n) {
    GroupSpec s{GroupFamily::SymA, n, 1, 1};
    s.validate();
    return s;
}

GroupSpec GroupSpec::hyperoctahedral(int n) {
    GroupSpec s{GroupFamily::HyperB, n, 2, 1};
    s.validate();
    return s;
}

GroupSpec GroupSpec::demihyperoctahedral(int n) {
    GroupSpec s{GroupFamily::DemiD, n, 2, 2};
    s.validate();
    return s;
}

GroupSpec GroupSpec::general(int r, int q, int n) {
    GroupSpec s{GroupFamily::GeneralG, n, r, q};
    s.validate();
    return s;
}

GroupSpec GroupSpec::dihedral(int m) {
    if (m < 3) throw std::invalid_argument("dih(n) needs n >= 3");
    GroupSpec s{GroupFamily::Dihedral, 2, m, m};
    s.validate();
    return s;
}

void GroupSpec::validate() const {
    if (n < 1) throw std::invalid_argument("group degree n must be >= 1");
    if (n > kMaxOracleDegree)
        throw BudgetExceeded("oracle supports degree n <= " + std::to_string(kMaxOracleDegree));
    if (r < 1 || r > 255) throw std::invalid_argument("colour modulus r must be in [1, 255]");
    if (q < 1 || r % q != 0) throw std::invalid_argument("q must divide r");
}

ExactInt GroupSpec::ambient_order() const { return power(ExactInt(r), static_cast<unsigned long>(n)) * factorial(n); }

ExactInt GroupSpec::order() const { return exact_divide(ambient_order(), q, "group order"); }

std::string GroupSpec::name() const {
    switch (family) {
        case GroupFamily::SymA: return "S_" + std::to_string(n);
        case GroupFamily::HyperB: return "B_" + std::to_string(n);
        case GroupFamily::DemiD: return "D_" + std::to_string(n);
        case GroupFamily::Dihedral: return "dih(" + std::to_string(r) + ")";
        case GroupFamily::GeneralG: break;
    }
    return "G(" + std::to_string(r) + "," + std::to_string(q) + "," + std::to_string(n) + ")";
}

void check_budget(const GroupSpec& spec, std::uint64_t budget) {
    spec.validate();
    if (spec.order() > ExactInt(static_cast<unsigned long>(budget)))
        throw BudgetExceeded(spec.name() + " has " + to_decimal(spec.order()) + " elements, over the budget of " +
                             std::to_string(budget));
    if (spec.ambient_order() > ExactInt(static_cast<unsigned long>(std::numeric_limits<std::uint32_t>::max())))
        throw BudgetExceeded(spec.name() + ": ambient group too large to index");
}

// ---------------------------------------------------------------------------
// Element stream

GroupStream::GroupStream(const GroupSpec& spec, std::uint64_t budget) : spec_(spec) {
    check_budget(spec, budget);
    perm_.resize(static_cast<std::size_t>(spec.n));
    std::iota(perm_.begin(), perm_.end(), 0);
    colors_.assign(static_cast<std::size_t>(spec.n), 0);
}

bool GroupStream::advance() {
    for (int i = spec_.n - 1; i >= 0; --i) {
        if (++colors_[i] < spec_.r) return true;
        colors_[i] = 0;
    }
    return std::next_permutation(perm_.begin(), perm_.end());
}

std::optional<ColoredPermutation> GroupStream::next() {
    while (!done_) {
        if (started_ && !advance()) {
            done_ = true;
            break;
        }
        started_ = true;
        int sum = 0;
        for (int c : colors_) sum += c;
        if (sum % spec_.q == 0) return ColoredPermutation(spec_.r, colors_, perm_);
    }
    return std::nullopt;
}

std::vector<ColoredPermutation> group_elements(const GroupSpec& spec, std::uint64_t budget) {
    std::vector<ColoredPermutation> out;
    GroupStream s(spec, budget);
    while (auto x = s.next()) out.push_back(std::move(*x));
    return out;
}

// ---------------------------------------------------------------------------
// Packed kernels

namespace {

using Letters = std::array<std::uint8_t, kMaxOracleDegree>;

struct Packed {
    Letters perm{};
    Letters colors{};
};

std::uint64_t u64_factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t u64_power(int base, int e) {
    std::uint64_t out = 1;
    for (int i = 0; i < e; ++i) out *= static_cast<std::uint64_t>(base);
    return out;
}

// Lexicographic rank <-> permutation.
void unrank_perm(std::uint64_t rank, int n, Letters& out) {
    std::array<std::uint8_t, kMaxOracleDegree> pool{};
    for (int i = 0; i < n; ++i) pool[i] = static_cast<std::uint8_t>(i);
    int left = n;
    for (int i = 0; i < n; ++i) {
        std::uint64_t f = u64_factorial(n - 1 - i);
        auto d = static_cast<int>(rank / f);
        rank %= f;
        out[i] = pool[d];
        for (int j = d; j + 1 < left; ++j) pool[j] = pool[j + 1];
        --left;
    }
}

std::uint64_t rank_perm(const Letters& p, int n) {
    std::uint64_t rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p[j] < p[i]) ++smaller;
        rank += static_cast<std::uint64_t>(smaller) * u64_factorial(n - 1 - i);
    }
    return rank;
}

// Colour vectors in base r, last letter least significant.
void unrank_colors(std::uint64_t rank, int n, int r, Letters& out) {
    for (int i = n - 1; i >= 0; --i) {
        out[i] = static_cast<std::uint8_t>(rank % static_cast<std::uint64_t>(r));
        rank /= static_cast<std::uint64_t>(r);
    }
}

std::uint64_t rank_colors(const Letters& c, int n, int r) {
    std::uint64_t rank = 0;
    for (int i = 0; i < n; ++i) rank = rank * static_cast<std::uint64_t>(r) + c[i];
    return rank;
}

// x * sign(y): sign = +1 gives x*x, sign = -1 gives x*bar(x).
void packed_square(const Packed& x, int n, int r, RootKind kind, Packed& y) {
    Letters inv{};
    for (int i = 0; i < n; ++i) inv[x.perm[i]] = static_cast<std::uint8_t>(i);
    for (int j = 0; j < n; ++j) {
        y.perm[j] = x.perm[x.perm[j]];
        int other = x.colors[inv[j]];
        int c = kind == RootKind::square ? x.colors[j] + other : x.colors[j] + r - other;
        y.colors[j] = static_cast<std::uint8_t>(c % r);
    }
}

bool packed_equal(const Packed& a, const Packed& b, int n) {
    for (int i = 0; i < n; ++i)
        if (a.perm[i] != b.perm[i] || a.colors[i] != b.colors[i]) return false;
    return true;
}

// Sorted (colour, length) codes, two bytes per cycle.
std::string type_key(const Packed& x, int n, int r) {
    std::array<std::uint16_t, kMaxOracleDegree> codes{};
    int k = 0;
    std::uint16_t seen = 0;
    for (int s = 0; s < n; ++s) {
        if (seen & (1u << s)) continue;
        int len = 0, color = 0;
        for (int i = s; !(seen & (1u << i)); i = x.perm[i]) {
            seen = static_cast<std::uint16_t>(seen | (1u << i));
            ++len;
            color += x.colors[i];
        }
        codes[k++] = static_cast<std::uint16_t>(((color % r) << 8) | len);
    }
    std::sort(codes.begin(), codes.begin() + k);
    std::string key(static_cast<std::size_t>(2 * k), '\0');
    for (int i = 0; i < k; ++i) {
        key[2 * i] = static_cast<char>(codes[i] >> 8);
        key[2 * i + 1] = static_cast<char>(codes[i] & 0xff);
    }
    return key;
}

RPartiteType decode_key(const std::string& key, int r) {
    std::vector<std::vector<int>> parts(static_cast<std::size_t>(r));
    for (std::size_t i = 0; i + 1 < key.size(); i += 2)
        parts[static_cast<unsigned char>(key[i])].push_back(static_cast<unsigned char>(key[i + 1]));
    std::vector<Partition> comps;
    for (auto& p : parts) comps.push_back(Partition::from_unsorted(std::move(p)));
    return RPartiteType(r, std::move(comps));
}

Packed pack(const ColoredPermutation& x) {
    Packed p;
    for (int i = 0; i < x.n(); ++i) {
        p.perm[i] = static_cast<std::uint8_t>(x.perm()[i]);
        p.colors[i] = static_cast<std::uint8_t>(x.colors()[i]);
    }
    return p;
}

struct Tally {
    std::uint64_t class_size = 0;
    std::uint64_t preimages = 0;
};

using TallyMap = std::unordered_map<std::string, Tally>;

// Runs body(x, y) for every member x of the group with y = x^2 or x xbar,
// sharded over permutations; each thread owns one TallyMap.
template <class Body>
std::vector<TallyMap> sharded_pass(const GroupSpec& spec, RootKind kind, Body&& body) {
    const int n = spec.n, r = spec.r, q = spec.q;
    const std::uint64_t perms = u64_factorial(n);
    const std::uint64_t colorings = u64_power(r, n);
    std::vector<TallyMap> maps(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
    {
        TallyMap& local = maps[static_cast<std::size_t>(omp_get_thread_num())];
        Packed x, y;
#pragma omp for schedule(dynamic, 16)
        for (std::int64_t p = 0; p < static_cast<std::int64_t>(perms); ++p) {
            unrank_perm(static_cast<std::uint64_t>(p), n, x.perm);
            for (std::uint64_t c = 0; c < colorings; ++c) {
                unrank_colors(c, n, r, x.colors);
                int sum = 0;
                for (int i = 0; i < n; ++i) sum += x.colors[i];
                if (sum % q != 0) continue;
                packed_square(x, n, r, kind, y);
                body(local, x, y);
            }
        }
    }
    return maps;
}

TallyMap merge(std::vector<TallyMap>& maps) {
    TallyMap out;
    for (auto& m : maps)
        for (auto& [k, v] : m) {
            auto& t = out[k];
            t.class_size += v.class_size;
            t.preimages += v.preimages;
        }
    return out;
}

TypeCensus finish_census(const TallyMap& merged, const GroupSpec& spec) {
    TypeCensus out;
    for (const auto& [key, t] : merged) {
        if (t.class_size == 0)
            throw std::logic_error("census: squares landed on a type with no elements in " + spec.name());
        ExactInt size(static_cast<unsigned long>(t.class_size));
        ExactInt roots = exact_divide(ExactInt(static_cast<unsigned long>(t.preimages)), size,
                                      "census of " + spec.name());
        out.emplace(decode_key(key, spec.r), TypeCount{size, roots});
    }
    return out;
}

bool classes_are_cycle_types(const GroupSpec& spec) {
    switch (spec.family) {
        case GroupFamily::SymA:
        case GroupFamily::HyperB:
        case GroupFamily::Dihedral: return true;
        case GroupFamily::GeneralG: return spec.q == 1;
        case GroupFamily::DemiD: return false;
    }
    return false;
}

}  // namespace

TypeCensus census_parallel(const GroupSpec& spec, RootKind kind, std::uint64_t budget) {
    check_budget(spec, budget);
    auto maps = sharded_pass(spec, kind, [&](TallyMap& local, const Packed& x, const Packed& y) {
        ++local[type_key(x, spec.n, spec.r)].class_size;
        ++local[type_key(y, spec.n, spec.r)].preimages;
    });
    return finish_census(merge(maps), spec);
}

TypeCensus census_serial(const GroupSpec& spec, RootKind kind, std::uint64_t budget) {
    std::map<RPartiteType, std::pair<ExactInt, ExactInt>> tally;
    GroupStream stream(spec, budget);
    while (auto x = stream.next()) {
        tally[x->cycle_type()].first += 1;
        auto y = kind == RootKind::square ? x->square() : x->abs_square();
        tally[y.cycle_type()].second += 1;
    }
    TypeCensus out;
    for (auto& [type, t] : tally) {
        if (t.first == 0) throw std::logic_error("census: squares landed on a type with no elements");
        out.emplace(type, TypeCount{t.first, exact_divide(t.second, t.first, "serial census of " + spec.name())});
    }
    return out;
}

TypeCensus square_census(const GroupSpec& spec, std::uint64_t budget) {
    if (!classes_are_cycle_types(spec))
        throw std::invalid_argument("square_census: classes of " + spec.name() +
                                    " are not cycle types (use dn_census or conj_class_sums)");
    return census_parallel(spec, RootKind::square, budget);
}

TypeCensus abs_square_census(const GroupSpec& spec, std::uint64_t budget) {
    if (spec.q != 1)
        throw std::invalid_argument("abs_square_census buckets by cycle type and needs q = 1; use conj_class_sums");
    return census_parallel(spec, RootKind::absolute, budget);
}

ColoredPermutation representative(const RPartiteType& type) {
    const int n = type.size();
    std::vector<int> perm(static_cast<std::size_t>(n)), colors(static_cast<std::size_t>(n), 0);
    int at = 0;
    for (int t = 0; t < type.r(); ++t) {
        for (int len : type.component(t).parts()) {
            for (int i = 0; i < len; ++i) perm[at + i] = at + (i + 1) % len;
            colors[at] = t;
            at += len;
        }
    }
    return ColoredPermutation(type.r(), std::move(colors), std::move(perm));
}

ColoredPermutation representative(const DnClass& c) {
    ColoredPermutation w = representative(RPartiteType::from(c.bip()));
    if (c.sign() != DnSign::minus) return w;
    std::vector<int> flip(static_cast<std::size_t>(w.n()), 0);
    flip[0] = 1;
    std::vector<int> id(static_cast<std::size_t>(w.n()));
    std::iota(id.begin(), id.end(), 0);
    return w.conjugate_by(ColoredPermutation(2, std::move(flip), std::move(id)));
}

namespace {

struct SplitReps {
    Packed plus, minus;
};

DnCensus assemble_dn(int n, const std::unordered_map<std::string, std::pair<std::uint64_t, std::uint64_t>>& split_hits,
                     const TallyMap& merged) {
    DnCensus out;
    for (const auto& c : dn_classes(n)) {
        const auto rep = representative(c);
        const std::string key = type_key(pack(rep), n, 2);
        if (c.sign() != DnSign::none) {
            auto it = split_hits.find(key);
            std::uint64_t v = it == split_hits.end() ? 0 : (c.sign() == DnSign::plus ? it->second.first : it->second.second);
            out.emplace(c, ExactInt(static_cast<unsigned long>(v)));
            continue;
        }
        auto it = merged.find(key);
        if (it == merged.end() || it->second.class_size == 0)
            throw std::logic_error("dn_census: class " + std::to_string(n) + " missing from the element pass");
        out.emplace(c, exact_divide(ExactInt(static_cast<unsigned long>(it->second.preimages)),
                                    ExactInt(static_cast<unsigned long>(it->second.class_size)), "dn_census"));
    }
    return out;
}

}  // namespace

DnCensus dn_census(int n, std::uint64_t budget) {
    const GroupSpec spec = GroupSpec::demihyperoctahedral(n);
    check_budget(spec, budget);
    std::unordered_map<std::string, SplitReps> reps;
    for (const auto& c : dn_classes(n)) {
        if (c.sign() != DnSign::plus) continue;
        auto plus = pack(representative(c));
        auto minus = pack(representative(DnClass(c.bip(), DnSign::minus)));
        reps.emplace(type_key(plus, n, 2), SplitReps{plus, minus});
    }
    using HitMap = std::unordered_map<std::string, std::pair<std::uint64_t, std::uint64_t>>;
    std::vector<HitMap> hits(static_cast<std::size_t>(omp_get_max_threads()));
    auto maps = sharded_pass(spec, RootKind::square, [&](TallyMap& local, const Packed& x, const Packed& y) {
        ++local[type_key(x, n, 2)].class_size;
        std::string ykey = type_key(y, n, 2);
        auto it = reps.find(ykey);
        if (it == reps.end()) {
            ++local[ykey].preimages;
            return;
        }
        auto& h = hits[static_cast<std::size_t>(omp_get_thread_num())][ykey];
        if (packed_equal(y, it->second.plus, n)) ++h.first;
        if (packed_equal(y, it->second.minus, n)) ++h.second;
    });
    HitMap split_hits;
    for (auto& m : hits)
        for (auto& [k, v] : m) {
            split_hits[k].first += v.first;
            split_hits[k].second += v.second;
        }
    return assemble_dn(n, split_hits, merge(maps));
}

DnCensus dn_census_serial(int n, std::uint64_t budget) {
    const GroupSpec spec = GroupSpec::demihyperoctahedral(n);
    std::map<DnClass, ColoredPermutation> reps;
    for (const auto& c : dn_classes(n)) reps.emplace(c, representative(c));
    // Non-split classes: preimages over class size. Split classes: direct hits.
    std::map<RPartiteType, std::pair<ExactInt, ExactInt>> tally;
    std::map<DnClass, ExactInt> direct;
    GroupStream stream(spec, budget);
    while (auto x = stream.next()) {
        tally[x->cycle_type()].first += 1;
        auto y = x->square();
        auto type = y.cycle_type();
        Bipartition b(type.component(0), type.component(1));
        if (DnClass::is_split(b)) {
            for (DnSign s : {DnSign::plus, DnSign::minus}) {
                DnClass c(b, s);
                if (y == reps.at(c)) direct[c] += 1;
            }
        } else {
            tally[type].second += 1;
        }
    }
    DnCensus out;
    for (const auto& [c, rep] : reps) {
        if (c.sign() != DnSign::none) {
            out.emplace(c, direct[c]);
            continue;
        }
        auto& t = tally.at(RPartiteType::from(c.bip()));
        out.emplace(c, exact_divide(t.second, t.first, "serial dn_census"));
    }
    return out;
}

ExactInt count_roots(const GroupSpec& spec, const ColoredPermutation& w, RootKind kind, std::uint64_t budget) {
    ExactInt count = 0;
    GroupStream stream(spec, budget);
    while (auto x = stream.next()) {
        if ((kind == RootKind::square ? x->square() : x->abs_square()) == w) count += 1;
    }
    return count;
}

// ---------------------------------------------------------------------------
// Ranked group models

ColoredGroupModel::ColoredGroupModel(GroupSpec spec, std::uint64_t budget) : spec_(spec) {
    check_budget(spec_, budget);
    color_space_ = u64_power(spec_.r, spec_.n);
    ambient_ = color_space_ * u64_factorial(spec_.n);
}

std::uint64_t ColoredGroupModel::rank(const ColoredPermutation& x) const {
    Packed p = pack(x);
    return rank_perm(p.perm, spec_.n) * color_space_ + rank_colors(p.colors, spec_.n, spec_.r);
}

ColoredPermutation ColoredGroupModel::unrank(std::uint64_t x) const {
    Packed p;
    unrank_perm(x / color_space_, spec_.n, p.perm);
    unrank_colors(x % color_space_, spec_.n, spec_.r, p.colors);
    std::vector<int> perm(p.perm.begin(), p.perm.begin() + spec_.n), colors(p.colors.begin(), p.colors.begin() + spec_.n);
    return ColoredPermutation(spec_.r, std::move(colors), std::move(perm));
}

bool ColoredGroupModel::contains(std::uint64_t x) const {
    if (x >= ambient_) return false;
    std::uint64_t c = x % color_space_;
    int sum = 0;
    for (int i = 0; i < spec_.n; ++i) {
        sum += static_cast<int>(c % static_cast<std::uint64_t>(spec_.r));
        c /= static_cast<std::uint64_t>(spec_.r);
    }
    return sum % spec_.q == 0;
}

std::uint64_t ColoredGroupModel::multiply(std::uint64_t a, std::uint64_t b) const { return rank(unrank(a) * unrank(b)); }
std::uint64_t ColoredGroupModel::inverse(std::uint64_t a) const { return rank(unrank(a).inverse()); }
std::uint64_t ColoredGroupModel::bar(std::uint64_t a) const { return rank(unrank(a).bar()); }
std::uint64_t ColoredGroupModel::identity() const { return rank(ColoredPermutation::identity(spec_.r, spec_.n)); }

std::vector<std::uint64_t> ColoredGroupModel::generators() const {
    const int n = spec_.n, r = spec_.r;
    std::vector<std::uint64_t> gens;
    std::vector<int> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    const std::vector<int> zero(static_cast<std::size_t>(n), 0);
    for (int i = 0; i + 1 < n; ++i) {
        auto p = id;
        std::swap(p[i], p[i + 1]);
        gens.push_back(rank(ColoredPermutation(r, zero, p)));
    }
    if (r > 1 && n >= 2) {
        auto c = zero;
        c[0] = 1;
        c[1] = r - 1;
        gens.push_back(rank(ColoredPermutation(r, c, id)));
    }
    if (spec_.q % r != 0) {
        auto c = zero;
        c[0] = spec_.q % r;
        gens.push_back(rank(ColoredPermutation(r, c, id)));
    }
    return gens;
}

ProductGroupModel::ProductGroupModel(std::shared_ptr<const GroupModel> a, std::shared_ptr<const GroupModel> b)
    : a_(std::move(a)), b_(std::move(b)) {
    if (!a_ || !b_) throw std::invalid_argument("product of null groups");
    if (a_->ambient_size() > std::numeric_limits<std::uint32_t>::max() / b_->ambient_size())
        throw BudgetExceeded("product group too large to index");
}

std::uint64_t ProductGroupModel::split(std::uint64_t x, std::uint64_t& second) const {
    second = x % b_->ambient_size();
    return x / b_->ambient_size();
}

std::uint64_t ProductGroupModel::ambient_size() const { return a_->ambient_size() * b_->ambient_size(); }

bool ProductGroupModel::contains(std::uint64_t x) const {
    std::uint64_t y;
    std::uint64_t f = split(x, y);
    return x < ambient_size() && a_->contains(f) && b_->contains(y);
}

std::uint64_t ProductGroupModel::multiply(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t a2, b2;
    std::uint64_t a1 = split(a, a2), b1 = split(b, b2);
    return a_->multiply(a1, b1) * b_->ambient_size() + b_->multiply(a2, b2);
}

std::uint64_t ProductGroupModel::inverse(std::uint64_t a) const {
    std::uint64_t a2;
    std::uint64_t a1 = split(a, a2);
    return a_->inverse(a1) * b_->ambient_size() + b_->inverse(a2);
}

std::uint64_t ProductGroupModel::bar(std::uint64_t a) const {
    std::uint64_t a2;
    std::uint64_t a1 = split(a, a2);
    return a_->bar(a1) * b_->ambient_size() + b_->bar(a2);
}

std::uint64_t ProductGroupModel::identity() const { return a_->identity() * b_->ambient_size() + b_->identity(); }

std::vector<std::uint64_t> ProductGroupModel::generators() const {
    std::vector<std::uint64_t> gens;
    for (auto g : a_->generators()) gens.push_back(g * b_->ambient_size() + b_->identity());
    for (auto g : b_->generators()) gens.push_back(a_->identity() * b_->ambient_size() + g);
    return gens;
}

std::string ProductGroupModel::name() const { return a_->name() + " x " + b_->name(); }

std::vector<ClassRecord> class_table(const GroupModel& g, RootKind kind, std::uint64_t budget) {
    const std::uint64_t ambient = g.ambient_size();
    std::uint64_t members = 0;
    for (std::uint64_t x = 0; x < ambient; ++x)
        if (g.contains(x)) ++members;
    if (members > budget)
        throw BudgetExceeded(g.name() + " has " + std::to_string(members) + " elements, over the budget of " +
                             std::to_string(budget));

    std::vector<std::uint32_t> roots(ambient, 0);
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(ambient); ++i) {
        auto x = static_cast<std::uint64_t>(i);
        if (!g.contains(x)) continue;
        std::uint64_t y = kind == RootKind::square ? g.multiply(x, x) : g.multiply(x, g.bar(x));
#pragma omp atomic
        ++roots[y];
    }

    const auto gens = g.generators();
    std::vector<std::uint64_t> gen_inv;
    for (auto s : gens) gen_inv.push_back(g.inverse(s));
    std::vector<std::int32_t> class_of(ambient, -1);
    std::vector<ClassRecord> out;
    for (std::uint64_t x = 0; x < ambient; ++x) {
        if (class_of[x] >= 0 || !g.contains(x)) continue;
        const auto id = static_cast<std::int32_t>(out.size());
        std::deque<std::uint64_t> queue{x};
        class_of[x] = id;
        std::uint64_t size = 0;
        while (!queue.empty()) {
            std::uint64_t y = queue.front();
            queue.pop_front();
            ++size;
            if (roots[y] != roots[x])
                throw std::logic_error("root count differs inside a conjugacy class of " + g.name());
            for (std::size_t k = 0; k < gens.size(); ++k) {
                std::uint64_t z = g.multiply(g.multiply(gens[k], y), gen_inv[k]);
                if (class_of[z] < 0) {
                    class_of[z] = id;
                    queue.push_back(z);
                }
            }
        }
        out.push_back({x, ExactInt(static_cast<unsigned long>(size)), ExactInt(static_cast<unsigned long>(roots[x]))});
    }
    return out;
}

ClassSums summarize(const GroupModel& g, const std::vector<ClassRecord>& table) {
    ClassSums out;
    out.classes = table.size();
    out.order = 0;
    out.s = 0;
    for (const auto& c : table) {
        out.order += c.size;
        out.s += c.roots;
        if (c.representative == g.identity()) out.gamma_e = c.roots;
    }
    return out;
}

ClassSums conj_class_sums(const GroupModel& g, RootKind kind, std::uint64_t budget) {
    return summarize(g, class_table(g, kind, budget));
}

bool column_sum_semantics(const GroupSpec& spec, RootKind kind) {
    if (kind == RootKind::absolute) return std::gcd(spec.q, spec.n) <= 2;
    // Square roots give column sums for the real reflection groups.
    return spec.family != GroupFamily::GeneralG || spec.r <= 2 || (spec.n == 2 && spec.q == spec.r);
}

ClassSums conj_class_sums(const GroupSpec& spec, RootKind kind, bool require_character_sums, std::uint64_t budget) {
    const bool character = column_sum_semantics(spec, kind);
    if (require_character_sums && !character)
        throw CharacterSemanticsError(spec.name() + ": root counts are not character-table column sums here");
    ColoredGroupModel model(spec, budget);
    ClassSums out = conj_class_sums(model, kind, budget);
    out.character_sums = character;
    return out;
}

DihedralSums dihedral_table(int n) {
    if (n < 3) throw std::invalid_argument("dih(n) needs n >= 3");
    if (n % 2 == 1) return {n + 1, (3 * n + 1) / 2};
    if (n % 4 == 2) return {n + 2, (3 * n + 2) / 2};
    return {n + 2, (3 * n + 4) / 2};
}

DihedralSums dihedral_oracle(int n, RootKind kind) {
    auto sums = conj_class_sums(GroupSpec::dihedral(n), kind);
    return {sums.gamma_e, sums.s};
}

}  // namespace colsum

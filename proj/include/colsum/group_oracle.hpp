#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "colsum/colored_permutation.hpp"
#include "colsum/exact.hpp"
#include "colsum/partition.hpp"

namespace colsum {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
inline constexpr int kMaxOracleDegree = 12;

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class GroupFamily { SymA, HyperB, DemiD, GeneralG, Dihedral };

// G(r,q,n): elements of G(r,1,n) whose colour sum is 0 mod q.
struct GroupSpec {
    GroupFamily family = GroupFamily::SymA;
    int n = 1;
    int r = 1;
    int q = 1;

    static GroupSpec symmetric(int n);
    static GroupSpec hyperoctahedral(int n);
    static GroupSpec demihyperoctahedral(int n);
    static GroupSpec general(int r, int q, int n);
    // dih(m) as G(m,m,2).
    static GroupSpec dihedral(int m);

    ExactInt order() const;
    // |G(r,1,n)| = r^n n!, the index space the oracle ranks elements in.
    ExactInt ambient_order() const;
    std::string name() const;
    void validate() const;
};

void check_budget(const GroupSpec& spec, std::uint64_t budget);

class GroupStream {
public:
    explicit GroupStream(const GroupSpec& spec, std::uint64_t budget = kDefaultBudget);
    std::optional<ColoredPermutation> next();

private:
    GroupSpec spec_;
    std::vector<int> perm_;
    std::vector<int> colors_;
    bool started_ = false;
    bool done_ = false;
    bool advance();
};

std::vector<ColoredPermutation> group_elements(const GroupSpec& spec, std::uint64_t budget = kDefaultBudget);

enum class RootKind { square, absolute };

struct TypeCount {
    ExactInt class_size;     // elements of G with this cycle type
    ExactInt roots;          // roots of one element of this type
    friend bool operator==(const TypeCount&, const TypeCount&) = default;
};

using TypeCensus = std::map<RPartiteType, TypeCount>;

// One pass over G, bucketing x and x^2 (or x xbar) by cycle type. Families whose
// classes are cycle types: SymA, HyperB, GeneralG with q = 1, Dihedral.
TypeCensus square_census(const GroupSpec& spec, std::uint64_t budget = kDefaultBudget);
TypeCensus abs_square_census(const GroupSpec& spec, std::uint64_t budget = kDefaultBudget);

// The same tallies through ColoredPermutation objects, one element at a time.
TypeCensus census_serial(const GroupSpec& spec, RootKind kind, std::uint64_t budget = kDefaultBudget);
// Packed OpenMP kernel; independent of the serial path except for the group definition.
TypeCensus census_parallel(const GroupSpec& spec, RootKind kind, std::uint64_t budget = kDefaultBudget);

// Canonical representative: cycles laid out on consecutive letters in the
// order of the components and parts, colour carried by the cycle's first letter.
ColoredPermutation representative(const RPartiteType& type);
// w_+ is the all-colour-0 layout; w_- is w_+ conjugated by the colour flip at letter 1.
ColoredPermutation representative(const DnClass& c);

using DnCensus = std::map<DnClass, ExactInt>;
DnCensus dn_census(int n, std::uint64_t budget = kDefaultBudget);
DnCensus dn_census_serial(int n, std::uint64_t budget = kDefaultBudget);

// Count roots of one element by scanning the whole group.
ExactInt count_roots(const GroupSpec& spec, const ColoredPermutation& w, RootKind kind,
                     std::uint64_t budget = kDefaultBudget);

// A finite group whose elements are ranked 0..ambient_size-1 (members are a subset).
class GroupModel {
public:
    virtual ~GroupModel() = default;
    virtual std::uint64_t ambient_size() const = 0;
    virtual bool contains(std::uint64_t x) const = 0;
    virtual std::uint64_t multiply(std::uint64_t a, std::uint64_t b) const = 0;
    virtual std::uint64_t inverse(std::uint64_t a) const = 0;
    virtual std::uint64_t bar(std::uint64_t a) const = 0;
    virtual std::uint64_t identity() const = 0;
    virtual std::vector<std::uint64_t> generators() const = 0;
    virtual std::string name() const = 0;
};

class ColoredGroupModel final : public GroupModel {
public:
    explicit ColoredGroupModel(GroupSpec spec, std::uint64_t budget = kDefaultBudget);
    std::uint64_t ambient_size() const override { return ambient_; }
    bool contains(std::uint64_t x) const override;
    std::uint64_t multiply(std::uint64_t a, std::uint64_t b) const override;
    std::uint64_t inverse(std::uint64_t a) const override;
    std::uint64_t bar(std::uint64_t a) const override;
    std::uint64_t identity() const override;
    std::vector<std::uint64_t> generators() const override;
    std::string name() const override { return spec_.name(); }

    const GroupSpec& spec() const noexcept { return spec_; }
    std::uint64_t rank(const ColoredPermutation& x) const;
    ColoredPermutation unrank(std::uint64_t x) const;

private:
    GroupSpec spec_;
    std::uint64_t color_space_;
    std::uint64_t ambient_;
};

class ProductGroupModel final : public GroupModel {
public:
    ProductGroupModel(std::shared_ptr<const GroupModel> a, std::shared_ptr<const GroupModel> b);
    std::uint64_t ambient_size() const override;
    bool contains(std::uint64_t x) const override;
    std::uint64_t multiply(std::uint64_t a, std::uint64_t b) const override;
    std::uint64_t inverse(std::uint64_t a) const override;
    std::uint64_t bar(std::uint64_t a) const override;
    std::uint64_t identity() const override;
    std::vector<std::uint64_t> generators() const override;
    std::string name() const override;

private:
    std::shared_ptr<const GroupModel> a_, b_;
    std::uint64_t split(std::uint64_t x, std::uint64_t& second) const;
};

struct ClassRecord {
    std::uint64_t representative;  // smallest rank in the class
    ExactInt size;
    ExactInt roots;                // roots of the representative
};

// Conjugacy classes by orbit closure under conjugation by the generators, with
// per-class root counts.
std::vector<ClassRecord> class_table(const GroupModel& g, RootKind kind, std::uint64_t budget = kDefaultBudget);

struct ClassSums {
    ExactInt order;
    std::size_t classes = 0;
    ExactInt s;        // sum over classes of the root count
    ExactInt gamma_e;  // roots of the identity
    bool character_sums = true;  // false when the counts are not known to be column sums
    bool abelian() const { return order == ExactInt(static_cast<unsigned long>(classes)); }
};

ClassSums conj_class_sums(const GroupModel& g, RootKind kind, std::uint64_t budget = kDefaultBudget);
ClassSums summarize(const GroupModel& g, const std::vector<ClassRecord>& table);

class CharacterSemanticsError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

bool column_sum_semantics(const GroupSpec& spec, RootKind kind);

// Absolute roots are column sums of G(r,q,n) only when gcd(q,n) <= 2. With
// require_character_sums the other cases throw; otherwise they come back
// flagged as plain root statistics.
ClassSums conj_class_sums(const GroupSpec& spec, RootKind kind = RootKind::absolute,
                          bool require_character_sums = false, std::uint64_t budget = kDefaultBudget);

struct DihedralSums {
    ExactInt gamma_e;
    ExactInt s;
    friend bool operator==(const DihedralSums&, const DihedralSums&) = default;
};

// Closed forms for dih(n), n >= 3.
DihedralSums dihedral_table(int n);
// The same two numbers from the oracle on G(n,n,2).
DihedralSums dihedral_oracle(int n, RootKind kind = RootKind::square);

}  // namespace colsum

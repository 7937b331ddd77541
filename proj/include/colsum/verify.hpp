#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "colsum/exact.hpp"
#include "colsum/sequences.hpp"

namespace colsum {

class SequenceCache;

struct CheckRecord {
    std::string id;          // e.g. "refined-bound.A"
    std::string statement;
    int n_from = 0;  // -1 when the check is not indexed by n
    int n_to = 0;
    bool passed = true;
    bool informational = false;  // reported, never fails the suite
    std::string witness;         // smallest failing n, or a summary when passing
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckRecord> checks;
    bool passed() const;
    const CheckRecord* find(const std::string& id) const;
    void append(const VerificationReport& other);
};

struct IdentityRanges {
    int convolution_n = 20;
    int bd_odd_n = 15;
    int invol_diff_n = 20;
    int sum_bound_A = 25;
    int sum_bound_B = 20;
    int sum_bound_D = 15;
    int sum_bound_dih = 60;
    int refined_A_n = 25;
    int refined_B_n = 20;
    int invol_A_n = 25;
    int invol_B_n = 20;
    int term_bound_A_n = 25;
    int term_bound_B_n = 20;
    int d_total_bound_n = 15;
    int lower_bound_r_max = 6;
    int lower_bound_n_max = 3;
    std::uint64_t lower_bound_budget = 100'000;
};

// Identity checks: convolutions, B/D relations, s <= 2 Gamma_e, refined bounds,
// involution ratios, s >= Gamma_e with equality iff abelian, and the product identity.
VerificationReport verify_identities(const IdentityRanges& ranges = {}, const SequenceCache* cache = nullptr);

struct OracleRanges {
    int sym_n = 7;
    int hyper_n = 5;
    int demi_n = 5;
    int g3_n = 4;
    bool g4_3 = true;
    int dihedral_n = 30;
    int r2_coincidence_n = 10;
};

// Formula counts against brute force, class by class.
VerificationReport verify_oracle_equivalence(const OracleRanges& ranges = {});

struct AsymptoticRow {
    int n = 0;
    Rational ratio;       // s_n / i_n (or s / Gamma_e for dih)
    double approx = 0.0;  // display only
    double reference = 0.0;  // the sandwich bound or limit, display only
    bool lower_ok = true;
    bool upper_ok = true;
};

struct AsymptoticReport {
    Family family = Family::A;
    std::string bound;  // the asserted sandwich, in words
    int n_from = 0;
    std::vector<AsymptoticRow> rows;
    bool passed() const;
};

// Exact sandwich checks:
//   A: 1 <= s_n/i_n <= 1 + 1/sqrt(n)        (n >= 4)
//   B: 1 <= s_n^B/i_n^B <= 1 + 4/sqrt(2n)   (n >= 6)
// Other families throw.
AsymptoticReport asymptotic_report(Family family, int max_n, const SequenceCache* cache = nullptr);
// |s/Gamma_e - 3/2| <= 3/n for dih(n), n >= 20.
AsymptoticReport asymptotic_report_dihedral(int max_n);

VerificationReport verify_asymptotics(int max_n_A = 25, int max_n_B = 20, int max_n_dih = 60,
                                      const SequenceCache* cache = nullptr);

}  // namespace colsum

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "colsum/exact.hpp"
#include "colsum/series.hpp"

namespace colsum {

// Sequence families:
//   A    symmetric groups S_n
//   B    hyperoctahedral groups B_n
//   D    demihyperoctahedral groups D_n
//   G    G(r,1,n), column sums = absolute square root counts
//   Gsq  G(r,1,n), plain square root counts (not column sums for r > 2)
enum class Family { A, B, D, G, Gsq };

Family parse_family(std::string_view text);
std::string to_string(Family f);
// Effective colour modulus: 1 for A, 2 for B and D, r otherwise.
int family_r(Family f, int r);

enum class Method { direct, gf, convolution, oracle };

Method parse_method(std::string_view text);
std::string to_string(Method m);

struct SequenceReport {
    Family family = Family::A;
    int r = 1;
    Method method = Method::direct;
    std::string quantity;          // "total", "involutions" or "derangement"
    std::vector<ExactInt> values;  // values[n] for n = 0..N
    double seconds = 0.0;

    int max_n() const { return static_cast<int>(values.size()) - 1; }
};

// i_n, i_n^B, i_n^D, or roots of the identity of G(r,1,n).
SequenceReport seq_involutions(Family family, int r, int max_n);

// Column sums over fixed-point-free classes (no colour-0 fixed points); A and B.
SequenceReport seq_g(Family family, int max_n);

// Character-table total sums s_n.
SequenceReport seq_table_sum(Family family, int r, int max_n, Method method);

// The generating function of the total sums as a truncated infinite product.
Series total_sum_gf(Family family, int r, int order);

// Direct sum for a single n (parallel kernel unless serial is requested).
ExactInt table_sum_direct(Family family, int r, int n, bool serial = false);

// Number of conjugacy classes (split D_n classes counted twice).
ExactInt class_count(Family family, int r, int n);

// Generating function of the number of classes with a nonzero column.
Series nonzero_columns_gf(Family family, int r, int order);

struct ZeroColumnCount {
    ExactInt classes;
    ExactInt zero;                   // by predicate scan
    std::optional<ExactInt> zero_gf; // classes minus the gf coefficient
    bool consistent() const { return !zero_gf || *zero_gf == zero; }
};

ZeroColumnCount zero_column_count(Family family, int r, int n, bool gf_check = false);

}  // namespace colsum

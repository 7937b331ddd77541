#pragma once

#include <cstdint>
#include <vector>

#include <omp.h>

#include "colsum/exact.hpp"
#include "colsum/partition.hpp"

// Sums and counts over all r-partite types of size n. The parallel versions
// shard by size vector (one weak composition per task) and combine per-thread
// partials in thread order; exact addition makes the result independent of the
// schedule. The serial versions walk the canonical stream and are the reference.
namespace colsum {

template <class Weight>
ExactInt sum_over_types_serial(int r, int n, const PartitionTable& table, Weight&& weight) {
    ExactInt total = 0;
    for_each_r_partite(r, n, table, [&](const RPartiteView& v) { total += weight(v); });
    return total;
}

template <class Weight>
ExactInt sum_over_types(int r, int n, const PartitionTable& table, Weight&& weight) {
    const auto shards = weak_compositions(n, r);
    std::vector<ExactInt> partial(static_cast<std::size_t>(omp_get_max_threads()), ExactInt(0));
#pragma omp parallel
    {
        ExactInt& acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t s = 0; s < static_cast<std::int64_t>(shards.size()); ++s)
            for_each_r_partite_in(r, shards[static_cast<std::size_t>(s)], table,
                                  [&](const RPartiteView& v) { acc += weight(v); });
    }
    ExactInt total = 0;
    for (const auto& p : partial) total += p;
    return total;
}

template <class Pred>
std::uint64_t count_types_serial(int r, int n, const PartitionTable& table, Pred&& pred) {
    std::uint64_t count = 0;
    for_each_r_partite(r, n, table, [&](const RPartiteView& v) { count += static_cast<std::uint64_t>(pred(v)); });
    return count;
}

// pred may return a multiplicity (D_n split classes count twice).
template <class Pred>
std::uint64_t count_types(int r, int n, const PartitionTable& table, Pred&& pred) {
    const auto shards = weak_compositions(n, r);
    std::uint64_t count = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : count)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(shards.size()); ++s)
        for_each_r_partite_in(r, shards[static_cast<std::size_t>(s)], table,
                              [&](const RPartiteView& v) { count += static_cast<std::uint64_t>(pred(v)); });
    return count;
}

}  // namespace colsum

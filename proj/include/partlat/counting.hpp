#ifndef PARTLAT_COUNTING_HPP
#define PARTLAT_COUNTING_HPP

#include <utility>
#include <vector>

#include "partlat/integer.hpp"
#include "partlat/partition.hpp"
#include "partlat/table.hpp"

// Closed recurrences for restricted and unrestricted partition counts.
//
// Every function is memoized on its full argument tuple. Negative totals
// count zero partitions, so the recurrences need no edge guards.

namespace partlat {

enum class PartitionMethod {
    row_sum,    ///< sum of the exact-parts row
    pentagonal, ///< Euler's pentagonal recurrence
    oracle      ///< brute-force enumeration (total <= oracle::kMaxTotal)
};

/// Unrestricted partition count p(M).
Integer p(int total, PartitionMethod method = PartitionMethod::pentagonal);

/// Partitions of M into exactly N positive parts.
/// p_exact(M,N) = p_exact(M-1,N-1) + p_exact(M-N,N).
Integer p_exact(int total, int parts);

/// Partitions of M into at most N parts.
Integer p_atmost(int total, int parts);

/// Partitions of M with every part <= max_part and at most max_parts parts.
/// p_box(m,n,M) = p_box(m,n-1,M) + p_box(m-1,n,M-n).
Integer p_box(int max_part, int max_parts, int total);

/// Largest part exactly m and exactly n parts: p_box(m-1, n-1, M-m-n+1).
Integer exact_frame(int largest, int parts, int total);

/// Sum over the number of parts of exact_frame(largest, j, M).
Integer p_fixed_largest(int largest, int total);

/// Sum over the largest part of exact_frame(i, parts, M).
Integer p_fixed_parts(int parts, int total);

/// Exactly N parts, each >= lowest (any integer): p_exact(M - N(lowest-1), N).
Integer p_min_part(int total, int parts, int lowest);

/// Odd partitions of i with exactly j parts: p_exact((i+j)/2, j) when i+j is even.
Integer odd_with_parts(int total, int parts);

struct ParitySplit {
    Integer odd = 0;
    Integer even = 0;
    Integer mixed = 0;
    Integer total = 0;
};

ParitySplit odd_even_mixed(int total);

/// Partitions into distinct parts with exactly k parts.
Integer distinct_with_parts(int total, int parts);

struct DistinctRow {
    std::vector<Integer> by_parts; ///< index k-1 holds the count with k parts, up to the largest feasible k
    Integer total = 0;
    Integer difference = 0;        ///< (odd number of parts) - (even number of parts)
};

DistinctRow distinct_table(int total);

/// Minimal trapezoid partitions with k rows whose consecutive parts differ
/// by one, sized k(3k-1)/2 and k(3k+1)/2.
std::pair<Partition, Partition> franklin_trapezoids(int k);

/// Rows m = 0..max_m, columns n = 0..max_m.
IntTable exact_parts_table(int max_m);
IntTable at_most_table(int max_m);

/// Odd partitions by number of parts, rows m = 1..max_m; annotated with the
/// odd/even/mixed/p sums.
IntTable odd_even_mixed_table(int max_m);

/// Distinct-part partitions by number of parts; annotated with the
/// odd-minus-even difference.
IntTable distinct_parts_table(int max_m);

/// Rows m = 0..max_m, columns j = 0..max_m: partitions of m with exactly j
/// unit parts.
IntTable unit_diff_table(int max_m);

/// Counts per (edge size, total) of partitions fitting an n_dims-dimensional
/// cube of the given edge: rows total 0..max_edge*n_dims, columns edge 0..max_edge.
IntTable cube_orbit_table(int max_edge, int n_dims);

/// Rows m = 2..max_m, columns n = 1..max_m-1: unit-exchange edges between
/// orbits with n and n+1 nonzero parts.
IntTable right_hand_neighbor_table(int max_m);

/// Row total of right_hand_neighbor_table: sum_{k=0}^{m-2} p(k).
Integer right_hand_neighbor_total(int m);

/// Rows n = 1..max_n, columns layer k = 1..: partitions of n with layer k.
IntTable layer_table(int max_n);

/// Partitions of n whose interior has size layer-1; computed from box counts.
Integer layer_count(int total, int layer);

/// Partitions whose hook frame has exactly d cells.
Integer diagonal_sum(int d);

/// For largest part k = 1..r: partitions with largest part k and r-k+1 parts.
std::vector<Integer> binomial_row(int r);

IntTable binomial_table(int max_r);

} // namespace partlat

#endif // PARTLAT_COUNTING_HPP

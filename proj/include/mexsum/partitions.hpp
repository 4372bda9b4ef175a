#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <vector>

namespace mexsum::partitions {

/// An integer partition: weakly decreasing positive parts summing to n.
/// The empty parts list is the unique partition of 0.
struct Partition {
    std::vector<unsigned> parts;
    unsigned n = 0;
};

/// Validates the invariants (non-increasing, parts >= 1, sum == n) and
/// throws std::invalid_argument on violation.
Partition make_partition(std::vector<unsigned> parts);

/// Visits every partition of n exactly once, in reverse-lexicographic order
/// of parts: n=4 yields 4; 3+1; 2+2; 2+1+1; 1+1+1+1. The vector passed to
/// the visitor is reused between calls; copy it if it must outlive the call.
void for_each_partition(unsigned n, const std::function<void(const std::vector<unsigned>&)>& visit);

/// Materialized enumeration; intended for small n (the count is p(n)).
std::vector<Partition> enumerate_partitions(unsigned n);

/// Visits every partition of n into distinct parts, parts strictly
/// decreasing, in reverse-lexicographic order.
void for_each_distinct_partition(unsigned n,
                                 const std::function<void(const std::vector<unsigned>&)>& visit);

/// Two-colored distinct-parts partition: parts are strictly decreasing within
/// each color; the same value may occur once in each color.
struct ColoredDistinctPartition {
    std::vector<unsigned> color1_parts;
    std::vector<unsigned> color2_parts;
    unsigned n = 0;
    unsigned num_parts = 0;
};

/// Visits each pair (color-1 distinct partition of j, color-2 distinct
/// partition of n-j) for j = 0..n exactly once.
void for_each_colored_distinct(unsigned n, const std::function<void(const ColoredDistinctPartition&)>& visit);

std::vector<ColoredDistinctPartition> enumerate_colored_distinct(unsigned n);

/// Number of partitions of n, by the memoized pentagonal-number recurrence.
/// p(n) = 0 for n < 0 and p(0) = 1.
mpz_class p(long long n);

/// Number of partitions of n into distinct parts; 0 for n < 0, q(0) = 1.
/// Backed by a memoized direct expansion of prod (1 + q^k).
mpz_class q_distinct(long long n);

/// Counts of partitions of n into distinct parts with an even / odd number
/// of parts, for all n <= max_n. Direct product expansion tracking parity.
struct DistinctParityTable {
    std::vector<mpz_class> even;
    std::vector<mpz_class> odd;
};
DistinctParityTable distinct_parity_table(std::size_t max_n);

struct D2Counts {
    mpz_class d2;
    mpz_class d2e;
    mpz_class d2o;
};

/// Two-colored distinct-parts counts of n (total, even #parts, odd #parts),
/// by enumeration. d2 == d2e + d2o.
D2Counts d2_counts(unsigned n);

/// Same counts for all n <= max_n via convolution of the single-color parity
/// table; scales far beyond enumeration range.
struct D2Table {
    std::vector<mpz_class> d2;
    std::vector<mpz_class> d2e;
    std::vector<mpz_class> d2o;
};
D2Table d2_table(std::size_t max_n);

/// m(m+1)/2.
unsigned long long triangular(unsigned long long m);

/// Pre-extends the p(n) and q(n) caches. The caches are not guarded by
/// locks: warm them from a single thread, after which concurrent readers
/// are safe as long as no call exceeds the warmed bound.
void warm_caches(unsigned max_n);

/// Drops both caches back to their initial state.
void reset_caches();

}  // namespace mexsum::partitions

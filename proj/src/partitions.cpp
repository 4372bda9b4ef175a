#include "mexsum/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mexsum::partitions {

namespace {

void descend_partitions(unsigned remaining, unsigned max_part, std::vector<unsigned>& parts,
                        const std::function<void(const std::vector<unsigned>&)>& visit) {
    if (remaining == 0) {
        visit(parts);
        return;
    }
    for (unsigned k = std::min(max_part, remaining); k >= 1; --k) {
        parts.push_back(k);
        descend_partitions(remaining - k, k, parts, visit);
        parts.pop_back();
    }
}

void descend_distinct(unsigned remaining, unsigned max_part, std::vector<unsigned>& parts,
                      const std::function<void(const std::vector<unsigned>&)>& visit) {
    if (remaining == 0) {
        visit(parts);
        return;
    }
    for (unsigned k = std::min(max_part, remaining); k >= 1; --k) {
        parts.push_back(k);
        descend_distinct(remaining - k, k - 1, parts, visit);
        parts.pop_back();
    }
}

// p(n) cache; index n holds p(n). Grown on demand, single-threaded.
std::vector<mpz_class>& p_cache() {
    static std::vector<mpz_class> cache{mpz_class(1)};
    return cache;
}

void extend_p_cache(std::size_t max_n) {
    auto& cache = p_cache();
    for (std::size_t n = cache.size(); n <= max_n; ++n) {
        mpz_class value = 0;
        // Pentagonal numbers g = k(3k-1)/2 and h = k(3k+1)/2, k = 1, 2, ...
        for (unsigned long long k = 1;; ++k) {
            const unsigned long long g = k * (3 * k - 1) / 2;
            if (g > n) break;
            const int sign = (k % 2 == 1) ? 1 : -1;
            if (sign > 0) value += cache[n - g];
            else value -= cache[n - g];
            const unsigned long long h = g + k;
            if (h > n) continue;
            if (sign > 0) value += cache[n - h];
            else value -= cache[n - h];
        }
        cache.push_back(value);
    }
}

// q(n) cache: coefficients of prod_{k>=1} (1 + q^k) up to the cached bound.
// Rebuilt from scratch when it must grow; grows with headroom so repeated
// one-step extensions stay linear amortized.
std::vector<mpz_class>& q_cache() {
    static std::vector<mpz_class> cache{mpz_class(1)};
    return cache;
}

void extend_q_cache(std::size_t max_n) {
    auto& cache = q_cache();
    if (cache.size() > max_n) return;
    const std::size_t bound = std::max(max_n, 2 * cache.size());
    std::vector<mpz_class> c(bound + 1);
    c[0] = 1;
    for (std::size_t k = 1; k <= bound; ++k) {
        for (std::size_t i = bound; i >= k; --i) {
            c[i] += c[i - k];
            if (i == k) break;
        }
    }
    cache = std::move(c);
}

}  // namespace

Partition make_partition(std::vector<unsigned> parts) {
    unsigned sum = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("partition parts must be >= 1");
        if (i > 0 && parts[i] > parts[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        sum += parts[i];
    }
    return Partition{std::move(parts), sum};
}

void for_each_partition(unsigned n, const std::function<void(const std::vector<unsigned>&)>& visit) {
    std::vector<unsigned> parts;
    descend_partitions(n, n == 0 ? 1 : n, parts, visit);
}

std::vector<Partition> enumerate_partitions(unsigned n) {
    std::vector<Partition> result;
    for_each_partition(n, [&](const std::vector<unsigned>& parts) {
        result.push_back(Partition{parts, n});
    });
    return result;
}

void for_each_distinct_partition(unsigned n,
                                 const std::function<void(const std::vector<unsigned>&)>& visit) {
    std::vector<unsigned> parts;
    descend_distinct(n, n == 0 ? 1 : n, parts, visit);
}

void for_each_colored_distinct(unsigned n,
                               const std::function<void(const ColoredDistinctPartition&)>& visit) {
    // Pre-materialize the distinct partitions of 0..n; they are reused for
    // every split j + (n-j).
    std::vector<std::vector<std::vector<unsigned>>> distinct(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
        for_each_distinct_partition(j, [&](const std::vector<unsigned>& parts) {
            distinct[j].push_back(parts);
        });
    }
    ColoredDistinctPartition item;
    item.n = n;
    for (unsigned j = 0; j <= n; ++j) {
        for (const auto& c1 : distinct[j]) {
            for (const auto& c2 : distinct[n - j]) {
                item.color1_parts = c1;
                item.color2_parts = c2;
                item.num_parts = static_cast<unsigned>(c1.size() + c2.size());
                visit(item);
            }
        }
    }
}

std::vector<ColoredDistinctPartition> enumerate_colored_distinct(unsigned n) {
    std::vector<ColoredDistinctPartition> result;
    for_each_colored_distinct(n, [&](const ColoredDistinctPartition& cp) { result.push_back(cp); });
    return result;
}

mpz_class p(long long n) {
    if (n < 0) return 0;
    auto& cache = p_cache();
    if (static_cast<std::size_t>(n) >= cache.size()) extend_p_cache(static_cast<std::size_t>(n));
    return cache[static_cast<std::size_t>(n)];
}

mpz_class q_distinct(long long n) {
    if (n < 0) return 0;
    extend_q_cache(static_cast<std::size_t>(n));
    return q_cache()[static_cast<std::size_t>(n)];
}

DistinctParityTable distinct_parity_table(std::size_t max_n) {
    DistinctParityTable t;
    t.even.assign(max_n + 1, 0);
    t.odd.assign(max_n + 1, 0);
    t.even[0] = 1;
    // Adding a part of size k flips the parity of the part count. The
    // descending index order keeps the not-yet-updated entries intact.
    for (std::size_t k = 1; k <= max_n; ++k) {
        for (std::size_t i = max_n; i >= k; --i) {
            t.even[i] += t.odd[i - k];
            t.odd[i] += t.even[i - k];
            if (i == k) break;
        }
    }
    return t;
}

D2Counts d2_counts(unsigned n) {
    D2Counts counts{0, 0, 0};
    for_each_colored_distinct(n, [&](const ColoredDistinctPartition& cp) {
        counts.d2 += 1;
        if (cp.num_parts % 2 == 0) counts.d2e += 1;
        else counts.d2o += 1;
    });
    return counts;
}

D2Table d2_table(std::size_t max_n) {
    const DistinctParityTable t = distinct_parity_table(max_n);
    D2Table d;
    d.d2.assign(max_n + 1, 0);
    d.d2e.assign(max_n + 1, 0);
    d.d2o.assign(max_n + 1, 0);
    // Total part-count parity of a colored pair is the product of parities.
    for (std::size_t j = 0; j <= max_n; ++j) {
        for (std::size_t i = j; i <= max_n; ++i) {
            d.d2e[i] += t.even[j] * t.even[i - j];
            d.d2e[i] += t.odd[j] * t.odd[i - j];
            d.d2o[i] += t.even[j] * t.odd[i - j];
            d.d2o[i] += t.odd[j] * t.even[i - j];
        }
    }
    for (std::size_t i = 0; i <= max_n; ++i) d.d2[i] = d.d2e[i] + d.d2o[i];
    return d;
}

unsigned long long triangular(unsigned long long m) { return m * (m + 1) / 2; }

void warm_caches(unsigned max_n) {
    extend_p_cache(max_n);
    extend_q_cache(max_n);
}

void reset_caches() {
    p_cache().assign(1, mpz_class(1));
    q_cache().assign(1, mpz_class(1));
}

}  // namespace mexsum::partitions

#pragma once

// Prime sieving and the von Mangoldt function.  A PrimeTable is immutable
// once built; the sieve switches to a segmented pass above the flat
// threshold so the working set stays near the segment size even at the
// 1e9 cap.  Prime-power tests go through integer root extraction, never
// through floating-point log comparisons.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zetabound {

inline constexpr std::uint64_t sieve_limit_max = 1'000'000'000;

struct MangoldtEntry {
    std::uint64_t n;
    double lambda; // log p for n = p^k
};

struct PrimeTable {
    std::uint64_t limit = 0;
    std::vector<std::uint32_t> primes;

    // (n, log p) for every prime power n = p^k <= bound, ascending in n.
    // bound defaults to the sieve limit and may not exceed it.
    std::vector<MangoldtEntry> mangoldt_support(std::uint64_t bound = 0) const {
        if (bound == 0) bound = limit;
        if (bound > limit)
            throw std::invalid_argument("mangoldt_support: bound exceeds sieve limit");
        std::vector<MangoldtEntry> out;
        for (std::uint32_t p : primes) {
            if (p > bound) break;
            double lp = std::log(static_cast<double>(p));
            // q*p stays below 1e18 under the limit cap, so no overflow guard
            for (std::uint64_t q = p; q <= bound; q *= p) out.push_back({q, lp});
        }
        std::sort(out.begin(), out.end(),
                  [](const MangoldtEntry& a, const MangoldtEntry& b) { return a.n < b.n; });
        return out;
    }
};

namespace detail {

inline std::vector<std::uint32_t> sieve_flat(std::uint64_t limit) {
    std::vector<std::uint8_t> composite(limit + 1, 0);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    }
    return primes;
}

inline std::vector<std::uint32_t> sieve_segmented(std::uint64_t limit) {
    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit)));
    while ((root + 1) * (root + 1) <= limit) ++root;
    std::vector<std::uint32_t> base = sieve_flat(root < 2 ? 2 : root);
    std::vector<std::uint32_t> primes = base;
    constexpr std::uint64_t seg = 1u << 22;
    std::vector<std::uint8_t> composite(seg);
    for (std::uint64_t lo = root + 1; lo <= limit; lo += seg) {
        std::uint64_t hi = std::min(lo + seg - 1, limit);
        std::fill(composite.begin(), composite.begin() + (hi - lo + 1), 0);
        for (std::uint32_t p : base) {
            std::uint64_t p2 = static_cast<std::uint64_t>(p) * p;
            if (p2 > hi) break;
            std::uint64_t start = ((lo + p - 1) / p) * p;
            if (start < p2) start = p2;
            for (std::uint64_t j = start; j <= hi; j += p) composite[j - lo] = 1;
        }
        for (std::uint64_t n = lo; n <= hi; ++n)
            if (!composite[n - lo]) primes.push_back(static_cast<std::uint32_t>(n));
    }
    return primes;
}

} // namespace detail

// flat_threshold is exposed so the segmented path can be forced at small
// limits; the two routes must agree exactly.
inline PrimeTable sieve(std::uint64_t limit, std::uint64_t flat_threshold = 10'000'000) {
    if (limit < 2) throw std::invalid_argument("sieve: limit must be at least 2");
    if (limit > sieve_limit_max)
        throw std::length_error("sieve: limit " + std::to_string(limit) +
                                " exceeds the memory budget cap " +
                                std::to_string(sieve_limit_max));
    PrimeTable t;
    t.limit = limit;
    t.primes = limit <= flat_threshold ? detail::sieve_flat(limit)
                                       : detail::sieve_segmented(limit);
    return t;
}

// Trial-division primality, kept free of sieve machinery so tests can use
// it as an independent oracle.
inline bool is_prime_trial(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// Lambda(n): log p when n = p^k, else 0.  Candidate roots come from
// rounding n^(1/k) and checking the integer power exactly.
inline double von_mangoldt(std::uint64_t n) {
    if (n < 2) return 0.0;
    for (int k = 1; (std::uint64_t{1} << k) <= n; ++k) {
        double guess = std::pow(static_cast<double>(n), 1.0 / k);
        for (std::int64_t r = static_cast<std::int64_t>(guess) - 1;
             r <= static_cast<std::int64_t>(guess) + 1; ++r) {
            if (r < 2) continue;
            std::uint64_t pw = 1;
            bool exact = true;
            for (int i = 0; i < k; ++i) {
                if (pw > n / static_cast<std::uint64_t>(r)) { exact = false; break; }
                pw *= static_cast<std::uint64_t>(r);
            }
            if (exact && pw == n && is_prime_trial(static_cast<std::uint64_t>(r)))
                return std::log(static_cast<double>(r));
        }
    }
    return 0.0;
}

} // namespace zetabound

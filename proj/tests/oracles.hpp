#pragma once

// Independent oracles used only by tests.  These deliberately take different
// routes than the library: recurrences and direct division instead of the
// streaming enumeration and prime-exponent bookkeeping they check.

#include <cstdint>
#include <map>
#include <vector>

#include "degpat/bigint.hpp"
#include "degpat/partitions.hpp"

namespace degpat::testing {

// p(n) by the pentagonal-number recurrence
// p(n) = sum_k (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
inline std::vector<std::uint64_t> partition_counts_pentagonal(unsigned max_n) {
    std::vector<std::int64_t> p(max_n + 1, 0);
    p[0] = 1;
    for (unsigned n = 1; n <= max_n; ++n) {
        std::int64_t total = 0;
        for (unsigned k = 1;; ++k) {
            const unsigned g1 = k * (3 * k - 1) / 2;
            const unsigned g2 = k * (3 * k + 1) / 2;
            if (g1 > n)
                break;
            const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
            total += sign * p[n - g1];
            if (g2 <= n)
                total += sign * p[n - g2];
        }
        p[n] = total;
    }
    return std::vector<std::uint64_t>(p.begin(), p.end());
}

// Number of partitions of n into distinct odd parts (classically equal to
// the number of self-conjugate partitions).
inline std::uint64_t distinct_odd_part_count(unsigned n) {
    // dp over odd parts 1, 3, 5, ..., each used at most once
    std::vector<std::uint64_t> dp(n + 1, 0);
    dp[0] = 1;
    for (unsigned part = 1; part <= n; part += 2)
        for (unsigned s = n; s >= part; --s)
            dp[s] += dp[s - part];
    return dp[n];
}

// Hook-length degree by plain factorial-over-product division.
inline BigInt character_degree_by_division(const Partition& lambda) {
    BigInt numerator = 1;
    for (unsigned k = 2; k <= lambda.n(); ++k)
        numerator *= k;
    BigInt hooks = 1;
    for (const auto& row : hook_lengths(lambda))
        for (unsigned h : row)
            hooks *= h;
    return numerator / hooks;
}

// Cyclotomic polynomial value by the Moebius product
// Phi_k(q) = prod_{d | k} (q^d - 1)^{mu(k/d)}.
inline BigInt cyclotomic_by_moebius(unsigned k, const BigInt& q) {
    auto moebius = [](unsigned m) -> int {
        int result = 1;
        for (unsigned p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                m /= p;
                if (m % p == 0)
                    return 0;
                result = -result;
            }
        }
        if (m > 1)
            result = -result;
        return result;
    };
    BigRational value = 1;
    for (unsigned d = 1; d <= k; ++d) {
        if (k % d != 0)
            continue;
        const int mu = moebius(k / d);
        if (mu == 0)
            continue;
        const BigRational factor(boost::multiprecision::pow(BigInt(q), d) - 1);
        if (mu == 1)
            value *= factor;
        else
            value /= factor;
    }
    if (boost::multiprecision::denominator(value) != 1)
        throw std::logic_error("cyclotomic oracle produced a non-integer");
    return boost::multiprecision::numerator(value);
}

// Smallest-prime-factor sieve for the full-factorization oracle.
inline std::vector<std::uint32_t> spf_table(std::uint32_t limit) {
    std::vector<std::uint32_t> spf(limit + 1, 0);
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (spf[i] == 0)
            for (std::uint64_t j = i; j <= limit; j += i)
                if (spf[j] == 0)
                    spf[j] = i;
    }
    return spf;
}

} // namespace degpat::testing

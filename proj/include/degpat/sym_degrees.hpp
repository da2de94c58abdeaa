#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "degpat/degree_pattern.hpp"
#include "degpat/partitions.hpp"

namespace degpat {

/// Degree of the irreducible character of S_n indexed by lambda:
/// n! divided by the product of all hook lengths.  Computed by prime
/// exponents (Legendre minus hook valuations), so no oversized
/// intermediate products ever appear.
BigInt character_degree(const Partition& lambda);

/// X_1(S_n).  Memoized per process; the returned reference stays valid for
/// the lifetime of the program.
const DegreePattern& degree_pattern(unsigned n);

/// cd(S_n), ascending, cd[0] = 1.
std::vector<BigInt> distinct_degrees(unsigned n);

/// d_i(S_n): the i-th smallest nontrivial distinct degree, i >= 1.
const BigInt& nth_smallest_degree(unsigned n, std::size_t i);

/// k(S_n) = p(n).
std::uint64_t class_count(unsigned n);

/// rho(S_n): primes dividing at least one character degree; equals the set
/// of primes <= n for n >= 5.
std::vector<std::uint32_t> degree_prime_support(unsigned n);

/// Classification of the nontrivial prime-power degrees of S_n: every such
/// degree is n-1 (when n-1 is a prime power) or one of the exceptional pairs
/// (n=5, 5), (n=6, 9), (n=6, 16), (n=8, 64), (n=9, 27).
struct PrimePowerDegree {
    BigInt degree;
    BigInt prime;
    unsigned exponent;
    enum class Case { DegreeNMinusOne, Exceptional, Unaccounted } accounted_by;
};

struct PrimePowerClassificationReport {
    unsigned n = 0;
    std::vector<PrimePowerDegree> findings;  // all nontrivial prime-power degrees
    std::vector<std::string> violations;     // unaccounted or missing expected degrees
    bool ok() const { return violations.empty(); }
};

PrimePowerClassificationReport verify_prime_power_classification(unsigned n);

} // namespace degpat

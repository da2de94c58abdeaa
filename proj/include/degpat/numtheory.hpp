#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "degpat/bigint.hpp"

namespace degpat {

BigInt factorial(unsigned n);

/// Exponent of the prime p in n! (Legendre's formula).
unsigned factorial_exponent(unsigned n, unsigned p);

/// Ascending primes <= n via a fresh sieve.
std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

/// Largest prime p with m/2 < p <= m, for m >= 15.  Existence is a theorem;
/// failure to find one is reported as an internal error.  Backed by a cached
/// sieve that only ever grows.
std::uint32_t bertrand_prime(std::uint32_t m);

/// n with n! = value, if any.  value = 1 resolves to n = 1.
std::optional<unsigned> factorial_inverse(const BigInt& value);

struct PrimePowerDecomposition {
    BigInt prime;
    unsigned exponent; // >= 1; prime^exponent reconstructs the input
};

/// (p, d) with x = p^d for prime p, or nullopt when x is not a prime power.
/// Exact integer root extraction throughout, no floating point.
std::optional<PrimePowerDecomposition> prime_power_decompose(const BigInt& x);

BigInt largest_prime_divisor(BigInt x);

/// Distinct prime divisors of x >= 2, ascending.
std::vector<BigInt> distinct_prime_divisors(BigInt x);

/// floor(x^(1/k)) by binary search on exact integers.
BigInt integer_nth_root(const BigInt& x, unsigned k);

/// Deterministic Miller-Rabin for inputs below 3.3e24 (first 13 prime bases);
/// a strong probable-prime test beyond that, which exceeds every size this
/// library produces.
bool is_prime(const BigInt& n);

} // namespace degpat

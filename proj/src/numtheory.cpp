#include "degpat/numtheory.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace degpat {

BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned k = 2; k <= n; ++k)
        f *= k;
    return f;
}

unsigned factorial_exponent(unsigned n, unsigned p) {
    unsigned e = 0;
    for (unsigned long long q = p; q <= n; q *= p)
        e += n / static_cast<unsigned>(q);
    return e;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    std::vector<std::uint32_t> primes;
    if (n < 2)
        return primes;
    std::vector<bool> composite(n + 1, false);
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (composite[i])
            continue;
        primes.push_back(i);
        for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= n; j += i)
            composite[j] = true;
    }
    return primes;
}

namespace {

// Growing sieve shared by bertrand_prime; single-assignment per extension.
std::mutex g_sieve_mutex;
std::vector<std::uint32_t> g_sieve_primes;
std::uint32_t g_sieve_limit = 0;

void ensure_sieved(std::uint32_t limit) {
    if (limit <= g_sieve_limit)
        return;
    std::uint32_t target = std::max<std::uint32_t>(limit, 1024);
    target = std::max(target, g_sieve_limit * 2);
    g_sieve_primes = primes_up_to(target);
    g_sieve_limit = target;
}

} // namespace

std::uint32_t bertrand_prime(std::uint32_t m) {
    if (m < 15)
        throw std::invalid_argument("bertrand_prime requires m >= 15");
    std::lock_guard<std::mutex> lock(g_sieve_mutex);
    ensure_sieved(m);
    auto it = std::upper_bound(g_sieve_primes.begin(), g_sieve_primes.end(), m);
    if (it == g_sieve_primes.begin())
        throw std::logic_error("no prime found below m");
    const std::uint32_t p = *(it - 1);
    if (2ull * p <= m)
        throw std::logic_error("no prime in (m/2, m]; sieve inconsistency");
    return p;
}

std::optional<unsigned> factorial_inverse(const BigInt& value) {
    if (value < 1)
        return std::nullopt;
    if (value == 1)
        return 1u;
    BigInt f = 1;
    for (unsigned n = 2;; ++n) {
        f *= n;
        if (f == value)
            return n;
        if (f > value)
            return std::nullopt;
    }
}

bool is_prime(const BigInt& n) {
    if (n < 2)
        return false;
    static const unsigned small_primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                            31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                                            73, 79, 83, 89, 97};
    for (unsigned p : small_primes) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    // Miller-Rabin with the first 13 prime bases.
    BigInt d = n - 1;
    unsigned r = 0;
    while (d % 2 == 0) {
        d >>= 1;
        ++r;
    }
    static const unsigned bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (unsigned a : bases) {
        BigInt x = boost::multiprecision::powm(BigInt(a), d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (unsigned i = 1; i < r; ++i) {
            x = (x * x) % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

BigInt integer_nth_root(const BigInt& x, unsigned k) {
    if (k == 0)
        throw std::invalid_argument("root index must be positive");
    if (x < 0)
        throw std::invalid_argument("negative radicand");
    if (x < 2 || k == 1)
        return x;
    const unsigned bits = boost::multiprecision::msb(x) + 1;
    BigInt hi = BigInt(1) << (bits / k + 1);
    BigInt lo = 0;
    while (lo < hi) { // invariant: lo^k <= x < (hi+1)^k
        BigInt mid = (lo + hi + 1) / 2;
        if (boost::multiprecision::pow(mid, k) <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

std::optional<PrimePowerDecomposition> prime_power_decompose(const BigInt& x) {
    if (x < 2)
        throw std::invalid_argument("prime_power_decompose requires x >= 2");
    // A small factor settles the question immediately: x = p^d or nothing.
    static const auto small = primes_up_to(1000);
    for (std::uint32_t p : small) {
        if (x % p == 0) {
            BigInt rest = x;
            unsigned e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            if (rest == 1)
                return PrimePowerDecomposition{BigInt(p), e};
            return std::nullopt;
        }
    }
    if (is_prime(x))
        return PrimePowerDecomposition{x, 1};
    // No factor <= 1000, so any prime-power form x = p^d has p > 1000 and
    // d <= log_1001(x).  Take the largest d with an exact d-th root; its root
    // cannot itself be a proper power.
    const unsigned bits = boost::multiprecision::msb(x) + 1;
    for (unsigned d = bits / 9; d >= 2; --d) { // 2^9 < 1000 < p
        BigInt r = integer_nth_root(x, d);
        if (boost::multiprecision::pow(r, d) == x) {
            if (is_prime(r))
                return PrimePowerDecomposition{r, d};
            return std::nullopt;
        }
    }
    return std::nullopt;
}

BigInt largest_prime_divisor(BigInt x) {
    if (x < 2)
        throw std::invalid_argument("largest_prime_divisor requires x >= 2");
    BigInt largest = 1;
    for (BigInt p = 2; p * p <= x; p += (p == 2 ? 1 : 2)) {
        while (x % p == 0) {
            largest = p;
            x /= p;
        }
    }
    if (x > 1)
        largest = x;
    return largest;
}

std::vector<BigInt> distinct_prime_divisors(BigInt x) {
    if (x < 2)
        throw std::invalid_argument("distinct_prime_divisors requires x >= 2");
    std::vector<BigInt> primes;
    for (BigInt p = 2; p * p <= x; p += (p == 2 ? 1 : 2)) {
        if (x % p == 0) {
            primes.push_back(p);
            while (x % p == 0)
                x /= p;
        }
    }
    if (x > 1)
        primes.push_back(x);
    return primes;
}

} // namespace degpat

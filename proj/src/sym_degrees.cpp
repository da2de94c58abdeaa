#include "degpat/sym_degrees.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "degpat/numtheory.hpp"

namespace degpat {

BigInt character_degree(const Partition& lambda) {
    const unsigned n = lambda.n();
    if (n <= 1)
        return 1;
    const auto primes = primes_up_to(n);
    std::vector<unsigned> exponents(primes.size());
    for (std::size_t k = 0; k < primes.size(); ++k)
        exponents[k] = factorial_exponent(n, primes[k]);
    for (const auto& row : hook_lengths(lambda)) {
        for (unsigned hook : row) {
            unsigned h = hook;
            for (std::size_t k = 0; k < primes.size() && h > 1; ++k) {
                while (h % primes[k] == 0) {
                    h /= primes[k];
                    --exponents[k]; // never negative: the product divides n!
                }
            }
        }
    }
    BigInt degree = 1;
    for (std::size_t k = 0; k < primes.size(); ++k)
        if (exponents[k])
            degree *= boost::multiprecision::pow(BigInt(primes[k]), exponents[k]);
    return degree;
}

const DegreePattern& degree_pattern(unsigned n) {
    static std::mutex mutex;
    static std::map<unsigned, std::unique_ptr<const DegreePattern>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        auto pattern = std::make_unique<DegreePattern>();
        for_each_partition(n, [&](const Partition& lambda) {
            pattern->add(character_degree(lambda));
        });
        it = cache.emplace(n, std::move(pattern)).first;
    }
    return *it->second;
}

std::vector<BigInt> distinct_degrees(unsigned n) {
    return degree_pattern(n).distinct_degrees();
}

const BigInt& nth_smallest_degree(unsigned n, std::size_t i) {
    return degree_pattern(n).nth_smallest_nontrivial(i);
}

std::uint64_t class_count(unsigned n) {
    return degree_pattern(n).class_count();
}

std::vector<std::uint32_t> degree_prime_support(unsigned n) {
    if (n < 5)
        throw std::invalid_argument("degree_prime_support requires n >= 5");
    const auto& pattern = degree_pattern(n);
    std::vector<std::uint32_t> support;
    for (std::uint32_t p : primes_up_to(n)) {
        for (const auto& [degree, mult] : pattern.entries()) {
            if (degree % p == 0) {
                support.push_back(p);
                break;
            }
        }
    }
    return support;
}

namespace {

// A degree of S_n divides n!, so trial division by the primes <= n fully
// factors it; prime-power detection here needs no general factoring.
std::optional<std::pair<BigInt, unsigned>> prime_power_of_degree(const BigInt& degree,
                                                                 unsigned n) {
    BigInt rest = degree;
    BigInt base = 0;
    unsigned exponent = 0;
    for (std::uint32_t p : primes_up_to(n)) {
        if (rest % p == 0) {
            if (base != 0)
                return std::nullopt; // second prime
            base = p;
            while (rest % p == 0) {
                rest /= p;
                ++exponent;
            }
        }
    }
    if (rest != 1)
        throw std::logic_error("degree does not divide n!");
    if (base == 0)
        return std::nullopt; // degree 1
    return std::make_pair(base, exponent);
}

} // namespace

PrimePowerClassificationReport verify_prime_power_classification(unsigned n) {
    if (n < 5)
        throw std::invalid_argument("classification applies for n >= 5");
    PrimePowerClassificationReport report;
    report.n = n;

    // Exceptional degrees expected at specific small n.
    std::vector<BigInt> expected_exceptional;
    if (n == 5)
        expected_exceptional = {BigInt(5)};
    else if (n == 6)
        expected_exceptional = {BigInt(9), BigInt(16)};
    else if (n == 8)
        expected_exceptional = {BigInt(64)};
    else if (n == 9)
        expected_exceptional = {BigInt(27)};

    const auto& pattern = degree_pattern(n);
    const BigInt n_minus_1 = n - 1;
    for (const auto& [degree, mult] : pattern.entries()) {
        if (degree == 1)
            continue;
        auto pp = prime_power_of_degree(degree, n);
        if (!pp)
            continue;
        PrimePowerDegree finding{degree, pp->first, pp->second,
                                 PrimePowerDegree::Case::Unaccounted};
        if (degree == n_minus_1) {
            finding.accounted_by = PrimePowerDegree::Case::DegreeNMinusOne;
        } else {
            bool exceptional = false;
            for (const auto& e : expected_exceptional)
                if (degree == e)
                    exceptional = true;
            if (exceptional) {
                finding.accounted_by = PrimePowerDegree::Case::Exceptional;
            } else {
                std::ostringstream msg;
                msg << "n=" << n << ": prime-power degree " << degree << " = "
                    << pp->first << "^" << pp->second << " is not accounted for";
                report.violations.push_back(msg.str());
            }
        }
        report.findings.push_back(std::move(finding));
    }

    for (const auto& e : expected_exceptional) {
        if (!pattern.contains_degree(e)) {
            std::ostringstream msg;
            msg << "n=" << n << ": expected exceptional degree " << e << " is absent";
            report.violations.push_back(msg.str());
        }
    }
    return report;
}

} // namespace degpat

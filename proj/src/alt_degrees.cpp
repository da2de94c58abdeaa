#include "degpat/alt_degrees.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "degpat/sym_degrees.hpp"

namespace degpat {

const DegreePattern& alt_degree_pattern(unsigned n) {
    if (n < 2)
        throw std::invalid_argument("alt_degree_pattern requires n >= 2");
    static std::mutex mutex;
    static std::map<unsigned, std::unique_ptr<const DegreePattern>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        auto pattern = std::make_unique<DegreePattern>();
        for_each_partition(n, [&](const Partition& lambda) {
            const Partition conj = lambda.conjugate();
            if (lambda == conj) {
                const BigInt chi = character_degree(lambda);
                if (chi % 2 != 0) {
                    std::ostringstream msg;
                    msg << "self-conjugate " << lambda.to_string()
                        << " has odd degree " << chi << "; splitting rule broken";
                    throw std::logic_error(msg.str());
                }
                pattern->add(chi / 2, 2);
            } else if (lambda < conj) {
                // canonical representative of the pair {lambda, lambda'}
                pattern->add(character_degree(lambda), 1);
            }
        });
        it = cache.emplace(n, std::move(pattern)).first;
    }
    return *it->second;
}

std::uint64_t alt_class_count(unsigned n) {
    if (n < 2)
        throw std::invalid_argument("alt_class_count requires n >= 2");
    const std::uint64_t k_sym = class_count(n);
    const std::uint64_t ps = count_self_conjugate(n);
    if ((k_sym - ps) % 2 != 0)
        throw std::logic_error("k(S_n) - p_s(n) is odd; cannot happen");
    return (k_sym - ps) / 2 + 2 * ps;
}

RemarkProbe probe_remark_conjecture(unsigned n) {
    if (n < 5)
        throw std::invalid_argument("probe_remark_conjecture requires n >= 5");
    RemarkProbe probe;
    probe.n = n;
    probe.witness = canonical_self_conjugate(n);
    probe.chi = character_degree(probe.witness);
    probe.half = probe.chi / 2;
    const auto& sym = degree_pattern(n);
    const auto& alt = alt_degree_pattern(n);
    probe.half_in_alt = alt.contains_degree(probe.half);
    probe.half_in_sym = sym.contains_degree(probe.half);
    probe.full_in_sym = sym.contains_degree(probe.chi);
    probe.full_in_alt = alt.contains_degree(probe.chi);
    return probe;
}

} // namespace degpat

#include "degpat/partitions.hpp"

#include <atomic>
#include <numeric>
#include <sstream>

namespace degpat {

namespace {
std::atomic<unsigned> g_cap{kDefaultEnumerationCap};
}

unsigned enumeration_cap() { return g_cap.load(std::memory_order_relaxed); }

void set_enumeration_cap(unsigned cap) { g_cap.store(cap, std::memory_order_relaxed); }

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    unsigned long long sum = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        sum += parts_[i];
    }
    n_ = static_cast<unsigned>(sum);
}

Partition Partition::conjugate() const {
    if (parts_.empty())
        return {};
    std::vector<unsigned> conj(parts_[0], 0);
    for (unsigned part : parts_)
        for (unsigned j = 0; j < part; ++j)
            ++conj[j];
    return Partition(unchecked_tag{}, conj, n_);
}

bool Partition::is_self_conjugate() const {
    if (parts_.empty())
        return true;
    if (parts_[0] != parts_.size())
        return false;
    return conjugate().parts_ == parts_;
}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out << ',';
        out << parts_[i];
    }
    out << ')';
    return out.str();
}

void for_each_partition(unsigned n, const std::function<void(const Partition&)>& visit) {
    if (n > enumeration_cap()) {
        std::ostringstream msg;
        msg << "partition enumeration for n=" << n << " exceeds the cap of "
            << enumeration_cap() << " (raise the cap to proceed)";
        throw enumeration_limit_error(msg.str());
    }
    if (n == 0) {
        visit(Partition{});
        return;
    }
    std::vector<unsigned> p{n};
    for (;;) {
        visit(Partition(Partition::unchecked_tag{}, p, n));
        // Decrement the last part > 1 and redistribute the freed units into
        // the largest summands the new tail allows.
        std::size_t k = p.size();
        while (k > 0 && p[k - 1] == 1)
            --k;
        if (k == 0)
            return;
        unsigned rem = static_cast<unsigned>(p.size() - k) + 1;
        p[k - 1] -= 1;
        p.resize(k);
        const unsigned fill = p[k - 1];
        while (rem > fill) {
            p.push_back(fill);
            rem -= fill;
        }
        if (rem)
            p.push_back(rem);
    }
}

std::vector<Partition> enumerate_partitions(unsigned n) {
    std::vector<Partition> all;
    for_each_partition(n, [&](const Partition& p) { all.push_back(p); });
    return all;
}

std::uint64_t partition_count(unsigned n) {
    std::uint64_t count = 0;
    for_each_partition(n, [&](const Partition&) { ++count; });
    return count;
}

std::uint64_t count_self_conjugate(unsigned n) {
    std::uint64_t count = 0;
    for_each_partition(n, [&](const Partition& p) {
        if (p.is_self_conjugate())
            ++count;
    });
    return count;
}

Partition canonical_self_conjugate(unsigned n) {
    if (n < 4)
        throw std::invalid_argument("canonical self-conjugate witness needs n >= 4");
    std::vector<unsigned> parts;
    if (n % 2 == 1) {
        const unsigned l = n / 2;
        parts.push_back(l + 1);
        parts.insert(parts.end(), l, 1);
    } else {
        const unsigned k = n / 2;
        parts.push_back(k);
        parts.push_back(2);
        parts.insert(parts.end(), k - 2, 1);
    }
    Partition witness(std::move(parts));
    if (witness.n() != n || !witness.is_self_conjugate())
        throw std::logic_error("self-conjugate witness construction failed");
    return witness;
}

std::vector<std::vector<unsigned>> hook_lengths(const Partition& lambda) {
    const auto& parts = lambda.parts();
    const auto conj = lambda.conjugate().parts();
    std::vector<std::vector<unsigned>> hooks(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        hooks[i].resize(parts[i]);
        for (unsigned j = 0; j < parts[i]; ++j)
            hooks[i][j] = parts[i] - j + conj[j] - static_cast<unsigned>(i) - 1;
    }
    return hooks;
}

} // namespace degpat

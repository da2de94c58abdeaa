#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace degpat {

// Thrown when a request would enumerate partitions beyond the configured cap.
class enumeration_limit_error : public std::length_error {
public:
    using std::length_error::length_error;
};

// Process-wide enumeration cap; full enumeration of p(50) = 204226 partitions
// is tractable by default, larger n must be requested explicitly.
constexpr unsigned kDefaultEnumerationCap = 50;
unsigned enumeration_cap();
void set_enumeration_cap(unsigned cap);

/// Weakly decreasing sequence of positive parts summing to n.  The empty
/// sequence is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned n() const { return n_; }
    std::size_t rows() const { return parts_.size(); }

    Partition conjugate() const;
    bool is_self_conjugate() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    // lexicographic on the part lists
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

    std::string to_string() const; // "(4,2,1,1)", "()" for the empty partition

private:
    struct unchecked_tag {};
    Partition(unchecked_tag, const std::vector<unsigned>& parts, unsigned n)
        : parts_(parts), n_(n) {}

    friend void for_each_partition(unsigned, const std::function<void(const Partition&)>&);

    std::vector<unsigned> parts_;
    unsigned n_ = 0;
};

/// Visits every partition of n exactly once, in reverse-lexicographic order:
/// (n) first, (1^n) last.  Throws enumeration_limit_error above the cap.
void for_each_partition(unsigned n, const std::function<void(const Partition&)>& visit);

std::vector<Partition> enumerate_partitions(unsigned n);

/// p(n), counted by streaming the enumeration.
std::uint64_t partition_count(unsigned n);

/// p_s(n) = #{lambda of n : lambda = lambda'}.
std::uint64_t count_self_conjugate(unsigned n);

/// The standard self-conjugate witness of n >= 4: (l+1,1^l) for n = 2l+1,
/// (k,2,1^{k-2}) for n = 2k.
Partition canonical_self_conjugate(unsigned n);

/// Hook length of cell (i,j): lambda_i - j + lambda'_j - i - 1 in 0-based
/// indices.  Row-shaped like the diagram.
std::vector<std::vector<unsigned>> hook_lengths(const Partition& lambda);

} // namespace degpat

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "degpat/bigint.hpp"

namespace degpat {

/// Multiset of irreducible character degrees, stored as degree ->
/// multiplicity.  The implied group order (sum of d^2 * mult) and the class
/// count (sum of multiplicities) are maintained incrementally.
class DegreePattern {
public:
    void add(const BigInt& degree, std::uint64_t multiplicity = 1);

    const std::map<BigInt, std::uint64_t>& entries() const { return entries_; }
    const BigInt& group_order() const { return order_; }
    std::uint64_t class_count() const { return classes_; }
    bool empty() const { return entries_.empty(); }

    std::uint64_t multiplicity_of(const BigInt& degree) const;
    bool contains_degree(const BigInt& degree) const;

    /// cd view: the distinct degrees, ascending (includes 1 when present).
    std::vector<BigInt> distinct_degrees() const;

    /// d_i view: the i-th smallest degree > 1, i >= 1.  Throws
    /// std::out_of_range past the last nontrivial degree.
    const BigInt& nth_smallest_nontrivial(std::size_t i) const;
    std::size_t nontrivial_degree_count() const;

    friend bool operator==(const DegreePattern& a, const DegreePattern& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::map<BigInt, std::uint64_t> entries_;
    BigInt order_ = 0;
    std::uint64_t classes_ = 0;
};

// Pattern file format: UTF-8 text, one "<degree> <multiplicity>" per line,
// degrees in strictly increasing decimal, '#' starts a comment line.
void write_pattern(std::ostream& out, const DegreePattern& pattern,
                   const std::string& comment = {});
DegreePattern read_pattern(std::istream& in);

/// Writes to a temporary file in the target directory, then renames, so a
/// failed run never leaves a partial pattern file.
void write_pattern_file(const std::string& path, const DegreePattern& pattern,
                        const std::string& comment = {});
DegreePattern read_pattern_file(const std::string& path);

} // namespace degpat

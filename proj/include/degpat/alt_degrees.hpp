#pragma once

#include <cstdint>

#include "degpat/degree_pattern.hpp"
#include "degpat/partitions.hpp"

namespace degpat {

/// X_1(A_n), built combinatorially from the S_n data: a non-self-conjugate
/// pair {lambda, lambda'} restricts to a single irreducible of the same
/// degree, a self-conjugate lambda splits into two of half the degree.
/// Memoized like degree_pattern.
const DegreePattern& alt_degree_pattern(unsigned n);

/// k(A_n) = (k(S_n) - p_s(n))/2 + 2 p_s(n).
std::uint64_t alt_class_count(unsigned n);

/// Data probe for the half-degree membership question at the canonical
/// self-conjugate witness: does chi/2 land in cd(A_n) \ cd(S_n), and chi in
/// cd(S_n) \ cd(A_n)?  Returns findings, asserts nothing.
struct RemarkProbe {
    unsigned n = 0;
    Partition witness;
    BigInt chi;
    BigInt half;
    bool half_in_alt = false;
    bool half_in_sym = false;
    bool full_in_sym = false;
    bool full_in_alt = false;
    bool half_in_alt_only() const { return half_in_alt && !half_in_sym; }
    bool full_in_sym_only() const { return full_in_sym && !full_in_alt; }
};

RemarkProbe probe_remark_conjecture(unsigned n);

} // namespace degpat

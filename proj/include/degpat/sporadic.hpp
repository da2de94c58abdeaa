#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "degpat/bigint.hpp"

namespace degpat {

class unknown_group_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Largest prime divisor and three smallest nontrivial character degrees for
/// the sporadic simple groups, the Tits group, and the degree-2 extensions
/// whose degree data differs enough to matter.
struct SporadicRecord {
    std::string_view name;
    unsigned largest_prime;
    std::uint64_t d1, d2, d3;
    bool has_outer_2; // a ".2" row exists for this (simple-group) row
};

const std::array<SporadicRecord, 40>& sporadic_table();

/// Exact-name lookup; unknown names raise unknown_group_error listing near
/// matches.
const SporadicRecord& sporadic_lookup(std::string_view name);

/// Further minimal degrees for a few groups, beyond the d1..d3 columns,
/// needed by specific elimination chains.
struct SupplementaryDegree {
    std::string_view group;
    int index; // the i of d_i
    std::uint64_t value;
};

const std::vector<SupplementaryDegree>& supplementary_degrees();

struct TableValidationReport {
    bool ok = true;
    std::vector<std::string> problems;
};

TableValidationReport validate_sporadic_table();

/// Per-n outcome of one elimination chain.
struct EliminationStep {
    long long n = 0;
    bool eliminated = false;
    std::string predicate; // named check that fired ("" for survivors)
    std::string detail;    // the instantiated inequality
};

struct ChainSummary {
    bool all_eliminated = true;
    std::map<std::string, std::uint64_t> predicate_counts;
    std::vector<long long> survivors;
    std::vector<EliminationStep> steps; // kept when the range is small
};

/// Replays, for every n in [n_min, n_max], the two contradiction chains that
/// rule the group out as a degree-pattern source:
///  - almost-simple: G almost simple with this socle and cd(G) inside
///    cd(S_n) forces d_i(G) >= d_i(S_n) and every known degree to appear
///    among the minimal degrees of S_n;
///  - wreath-square: G' = S x S with |G:G'| = 2 forces 2a and a^2 into
///    cd(S_n) for every nontrivial a in cd(S), and n >= 2p(S).
struct EliminationReport {
    std::string group;
    long long n_min = 0, n_max = 0;
    ChainSummary almost_simple;
    ChainSummary wreath_square;
    bool all_eliminated() const {
        return almost_simple.all_eliminated && wreath_square.all_eliminated;
    }
};

EliminationReport replay_elimination(std::string_view name, long long n_min,
                                     long long n_max);

} // namespace degpat

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "degpat/degree_pattern.hpp"

namespace degpat {

enum class RejectionStage {
    UnitMultiplicity,  // multiplicity of degree 1 is not 2
    OrderNotFactorial, // sum of d^2 * mult is no factorial
    PatternMismatch,   // order is n! but the multiset is not X_1(S_n)
};

std::string to_string(RejectionStage stage);

struct PatternMismatchWitness {
    BigInt degree;        // smallest degree where the multisets differ
    std::uint64_t expected; // multiplicity in X_1(S_n)
    std::uint64_t found;    // multiplicity in the input
};

struct RecognitionReport {
    bool accepted = false;
    unsigned n = 0; // meaningful when accepted, or at stage PatternMismatch
    std::optional<RejectionStage> stage;
    std::optional<PatternMismatchWitness> witness;
    std::string detail;

    /// Stable single-line rendering: "verdict=... [n=...] [stage=...]
    /// [degree=... expected=... found=...]".
    std::string machine_line() const;
};

/// Decides whether the input multiset equals X_1(S_n) for some n, and which.
/// Multiset equality is the deciding condition, so recognition reduces to
/// three stages: degree-1 multiplicity, factorial order, exact comparison.
/// Throws enumeration_limit_error when the implied n is above the cap
/// (distinct from rejection) and std::invalid_argument on an empty input.
RecognitionReport recognize(const DegreePattern& input);

/// cd(D) inside cd(S_n) and the induced minimal-degree monotonicity
/// d_i(D) >= d_i(S_n); reports the first violation of each.
struct SubsetDiagnostic {
    bool subset_ok = true;
    std::optional<BigInt> first_missing_degree;
    bool monotone_ok = true;
    std::optional<std::size_t> first_monotone_index;
    std::optional<BigInt> monotone_value;   // d_i(D) at the violation
    std::optional<BigInt> monotone_minimum; // d_i(S_n) it fell below
};

SubsetDiagnostic subset_diagnostic(const DegreePattern& pattern, unsigned n);

/// Constraints a direct-square socle places on cd(S_n): every nontrivial
/// a in cd(S) forces 2a and a^2 into cd(S_n), and every prime r dividing
/// some a forces r^2 | n!, i.e. n >= 2r.
struct WreathViolation {
    enum class Kind { MissingDouble, MissingSquare, PrimeBound } kind;
    BigInt witness; // the degree a, or the prime r
    BigInt value;   // 2a / a^2 missing from cd(S_n), or the required 2r
};

struct WreathReport {
    unsigned n = 0;
    std::vector<WreathViolation> violations;
    bool ok() const { return violations.empty(); }
};

WreathReport wreath_constraint_check(const std::vector<BigInt>& cd_socle, unsigned n);

/// Class-count separation that kills the A_n x Z_2 candidate: the doubled
/// pattern matches the order n! but k(A_n x Z_2) = 2 k(A_n) exceeds k(S_n)
/// by 3 p_s(n) >= 3.
struct AltSeparationReport {
    unsigned n = 0;
    std::uint64_t sym_classes = 0;
    std::uint64_t alt_classes = 0;
    std::uint64_t self_conjugate_count = 0;
    std::uint64_t gap = 0; // 2 k(A_n) - k(S_n)
    bool identity_holds = false;
    bool doubled_alt_order_matches = false;
};

AltSeparationReport alt_double_separation(unsigned n);

/// X_1(A_n x Z_2): every A_n entry with doubled multiplicity.
DegreePattern doubled_alt_pattern(unsigned n);

} // namespace degpat

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "degpat/bigint.hpp"

namespace degpat {

/// Thrown when a degree formula fails to collapse to a plain positive
/// integer (a transcription bug, not a data condition).
class integrality_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Exact element a + b*sqrt(r) of Q(sqrt r), r in {2, 3}.  Closed under
/// addition and multiplication; to_integer() extracts a plain integer and
/// fails loudly otherwise.
class QuadraticSurd {
public:
    QuadraticSurd(BigRational rational, BigRational surd_coeff, unsigned radicand);
    static QuadraticSurd from_integer(const BigInt& value, unsigned radicand);
    static QuadraticSurd root(unsigned radicand); // sqrt(r) itself

    unsigned radicand() const { return radicand_; }
    const BigRational& rational_part() const { return rational_; }
    const BigRational& surd_part() const { return surd_; }

    friend QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b);
    friend QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b);
    friend QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b);

    /// Division by sqrt(r): multiply by sqrt(r)/r.
    QuadraticSurd over_root() const;

    bool is_integer() const;
    BigInt to_integer() const; // throws integrality_error

    std::string to_string() const;

private:
    BigRational rational_;
    BigRational surd_;
    unsigned radicand_;
};

enum class LieFamily {
    A,          // linear, dimension n >= 3 over F_q
    TwistedA,   // unitary, dimension n >= 3
    B,          // odd orthogonal, rank n >= 2
    C,          // symplectic, rank n >= 2
    D,          // even orthogonal plus type, rank n >= 4
    TwistedD,   // even orthogonal minus type, rank n >= 4
    G2,
    TwistedD4,  // triality twist of D4
    F4,
    E6,
    TwistedE6,
    E7,
    E8,
    SuzukiB2,   // field size 2^{2m+1}, m >= 1
    ReeG2,      // field size 3^{2m+1}, m >= 1
    ReeF4,      // field size 2^{2m+1}, m >= 1
    L2,         // rank-one linear, q >= 4
};

/// Family + parameters, validated on construction.  For the Suzuki and Ree
/// families q holds the field size p^{2m+1} and twist_m the exponent m.
struct LieFamilySpec {
    LieFamily family;
    unsigned rank;   // A/TwistedA: dimension; B/C/D/TwistedD: rank; else 0
    BigInt q;
    unsigned twist_m; // Suzuki-Ree only

    static LieFamilySpec classical(LieFamily family, unsigned rank, const BigInt& q);
    static LieFamilySpec exceptional(LieFamily family, const BigInt& q);
    static LieFamilySpec suzuki_ree(LieFamily family, unsigned m);
    static LieFamilySpec linear_rank_one(const BigInt& q);

    std::string name() const; // "A3(2)", "2B2(8)", "L2(7)", ...
};

/// Small groups that are isomorphic to (covers of) alternating groups and
/// therefore excluded from the simple-group sweeps, with the isomorphism as
/// the reason: L2(4), L2(5), L2(9), L4(2).
std::optional<std::string> excluded_isomorphism(const LieFamilySpec& spec);

/// Cyclotomic polynomial values for exactly the indices the degree formulas
/// use: {1,2,3,4,6,7,8,9,12,14,18,20,24}.
BigInt cyclotomic_value(unsigned k, const BigInt& q);
QuadraticSurd cyclotomic_value(unsigned k, const QuadraticSurd& q);
const std::vector<unsigned>& supported_cyclotomic_indices();

/// Degree of the Steinberg character: the full power of the defining
/// characteristic in the group order.
BigInt steinberg_degree(const LieFamilySpec& spec);

/// The distinguished unipotent degree strictly between 1 and the Steinberg
/// degree, one per family (undefined for L2).  For the Suzuki and Ree
/// families the evaluation runs in Q(sqrt p) and must collapse to an
/// integer.
BigInt subunipotent_degree(const LieFamilySpec& spec);

/// 1 < subunipotent < steinberg.  Throws for L2 and for the excluded
/// isomorphism cases.
bool verify_sandwich(const LieFamilySpec& spec);

enum class L2Range {
    WithinPgl,     // socle <= G <= PGL
    WithinPgammal, // G fixes the half-degree pair (socle extended by field maps)
    AbovePgl,      // PGL <= G
    Generic,       // no containment known; both candidate degrees reported
};

/// Character degrees guaranteed for an almost simple group with socle
/// L2(q), q >= 7, by automorphism range.  In characteristic != 3 the degree
/// q+delta with q = delta (mod 3); in characteristic 3 the degree (q+eps)/2
/// or q+eps with q = eps (mod 4), plus q-1 and q+1 inside PGL.
std::vector<BigInt> l2_guaranteed_degrees(const BigInt& q, L2Range range);

struct SandwichResult {
    std::string name;
    bool skipped = false;
    std::string skip_reason;
    BigInt chi1;
    BigInt steinberg;
    bool ok = false;
};

/// Sweep of the default parameter grid: A/TwistedA dimensions 3..8 and
/// B/C ranks 2..6 and D/TwistedD ranks 4..7 over q in {2,3,4,5,7,8,9},
/// exceptional families over the same q (G2 from q=3), Suzuki-Ree m in
/// {1,2,3}.  Excluded specs appear as skipped entries.
std::vector<SandwichResult> sandwich_grid();

} // namespace degpat

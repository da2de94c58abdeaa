#include "degpat/lie_degrees.hpp"

#include <map>
#include <sstream>

#include "degpat/numtheory.hpp"

namespace degpat {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;
using boost::multiprecision::pow;

// ---------------------------------------------------------------------------
// QuadraticSurd

QuadraticSurd::QuadraticSurd(BigRational rational, BigRational surd_coeff,
                             unsigned radicand)
    : rational_(std::move(rational)), surd_(std::move(surd_coeff)), radicand_(radicand) {
    if (radicand_ != 2 && radicand_ != 3)
        throw std::invalid_argument("radicand must be 2 or 3");
}

QuadraticSurd QuadraticSurd::from_integer(const BigInt& value, unsigned radicand) {
    return QuadraticSurd(BigRational(value), BigRational(0), radicand);
}

QuadraticSurd QuadraticSurd::root(unsigned radicand) {
    return QuadraticSurd(BigRational(0), BigRational(1), radicand);
}

namespace {
void require_same_field(const QuadraticSurd& a, const QuadraticSurd& b) {
    if (a.radicand() != b.radicand())
        throw std::invalid_argument("mixed radicands");
}
} // namespace

QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b) {
    require_same_field(a, b);
    return QuadraticSurd(a.rational_ + b.rational_, a.surd_ + b.surd_, a.radicand_);
}

QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b) {
    require_same_field(a, b);
    return QuadraticSurd(a.rational_ - b.rational_, a.surd_ - b.surd_, a.radicand_);
}

QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b) {
    require_same_field(a, b);
    return QuadraticSurd(a.rational_ * b.rational_ + a.surd_ * b.surd_ * a.radicand_,
                         a.rational_ * b.surd_ + a.surd_ * b.rational_, a.radicand_);
}

QuadraticSurd QuadraticSurd::over_root() const {
    // (a + b sqrt r) / sqrt r = b + (a/r) sqrt r
    return QuadraticSurd(surd_, rational_ / radicand_, radicand_);
}

bool QuadraticSurd::is_integer() const {
    return surd_ == 0 && denominator(rational_) == 1;
}

BigInt QuadraticSurd::to_integer() const {
    if (!is_integer())
        throw integrality_error("surd value " + to_string() +
                                " does not collapse to an integer");
    return numerator(rational_);
}

std::string QuadraticSurd::to_string() const {
    std::ostringstream out;
    out << rational_;
    if (surd_ != 0)
        out << " + (" << surd_ << ")*sqrt(" << radicand_ << ")";
    return out.str();
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

namespace {

const std::map<unsigned, std::vector<int>>& cyclotomic_coefficients() {
    // ascending powers
    static const std::map<unsigned, std::vector<int>> table = {
        {1, {-1, 1}},
        {2, {1, 1}},
        {3, {1, 1, 1}},
        {4, {1, 0, 1}},
        {6, {1, -1, 1}},
        {7, {1, 1, 1, 1, 1, 1, 1}},
        {8, {1, 0, 0, 0, 1}},
        {9, {1, 0, 0, 1, 0, 0, 1}},
        {12, {1, 0, -1, 0, 1}},
        {14, {1, -1, 1, -1, 1, -1, 1}},
        {18, {1, 0, 0, -1, 0, 0, 1}},
        {20, {1, 0, -1, 0, 1, 0, -1, 0, 1}},
        {24, {1, 0, 0, 0, -1, 0, 0, 0, 1}},
    };
    return table;
}

const std::vector<int>& coefficients_for(unsigned k) {
    auto it = cyclotomic_coefficients().find(k);
    if (it == cyclotomic_coefficients().end())
        throw std::invalid_argument("unsupported cyclotomic index " + std::to_string(k));
    return it->second;
}

} // namespace

const std::vector<unsigned>& supported_cyclotomic_indices() {
    static const std::vector<unsigned> indices = [] {
        std::vector<unsigned> v;
        for (const auto& [k, coeffs] : cyclotomic_coefficients())
            v.push_back(k);
        return v;
    }();
    return indices;
}

BigInt cyclotomic_value(unsigned k, const BigInt& q) {
    if (q < 2)
        throw std::invalid_argument("cyclotomic_value requires q >= 2");
    const auto& coeffs = coefficients_for(k);
    BigInt value = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        value = value * q + *it;
    return value;
}

QuadraticSurd cyclotomic_value(unsigned k, const QuadraticSurd& q) {
    const auto& coeffs = coefficients_for(k);
    QuadraticSurd value = QuadraticSurd::from_integer(0, q.radicand());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        value = value * q + QuadraticSurd::from_integer(*it, q.radicand());
    return value;
}

// ---------------------------------------------------------------------------
// LieFamilySpec

namespace {

const char* family_tag(LieFamily family) {
    switch (family) {
    case LieFamily::A: return "A";
    case LieFamily::TwistedA: return "2A";
    case LieFamily::B: return "B";
    case LieFamily::C: return "C";
    case LieFamily::D: return "D";
    case LieFamily::TwistedD: return "2D";
    case LieFamily::G2: return "G2";
    case LieFamily::TwistedD4: return "3D4";
    case LieFamily::F4: return "F4";
    case LieFamily::E6: return "E6";
    case LieFamily::TwistedE6: return "2E6";
    case LieFamily::E7: return "E7";
    case LieFamily::E8: return "E8";
    case LieFamily::SuzukiB2: return "2B2";
    case LieFamily::ReeG2: return "2G2";
    case LieFamily::ReeF4: return "2F4";
    case LieFamily::L2: return "L2";
    }
    throw std::logic_error("unreachable family tag");
}

void require_prime_power(const BigInt& q) {
    if (q < 2 || !prime_power_decompose(q))
        throw std::invalid_argument("q must be a prime power >= 2");
}

} // namespace

LieFamilySpec LieFamilySpec::classical(LieFamily family, unsigned rank, const BigInt& q) {
    require_prime_power(q);
    switch (family) {
    case LieFamily::A:
    case LieFamily::TwistedA:
        if (rank < 3)
            throw std::invalid_argument(
                "linear and unitary families need dimension n >= 3");
        break;
    case LieFamily::B:
    case LieFamily::C:
        if (rank < 2)
            throw std::invalid_argument("B/C families need rank n >= 2");
        if (rank == 2 && q == 2)
            throw std::invalid_argument(
                "B2(2)/C2(2) rejected: S4(2) is isomorphic to S6 and not simple");
        break;
    case LieFamily::D:
    case LieFamily::TwistedD:
        if (rank < 4)
            throw std::invalid_argument("D-type families need rank n >= 4");
        break;
    default:
        throw std::invalid_argument("classical() expects a classical family");
    }
    return LieFamilySpec{family, rank, q, 0};
}

LieFamilySpec LieFamilySpec::exceptional(LieFamily family, const BigInt& q) {
    require_prime_power(q);
    switch (family) {
    case LieFamily::G2:
        if (q < 3)
            throw std::invalid_argument(
                "G2(2) rejected: isomorphic to U3(3).2, not simple");
        break;
    case LieFamily::TwistedD4:
    case LieFamily::F4:
    case LieFamily::E6:
    case LieFamily::TwistedE6:
    case LieFamily::E7:
    case LieFamily::E8:
        break;
    default:
        throw std::invalid_argument("exceptional() expects an exceptional family");
    }
    return LieFamilySpec{family, 0, q, 0};
}

LieFamilySpec LieFamilySpec::suzuki_ree(LieFamily family, unsigned m) {
    unsigned p = 0;
    switch (family) {
    case LieFamily::SuzukiB2:
        if (m < 1)
            throw std::invalid_argument("2B2(2) rejected: solvable");
        p = 2;
        break;
    case LieFamily::ReeG2:
        if (m < 1)
            throw std::invalid_argument(
                "2G2(3) rejected: its derived subgroup is isomorphic to L2(8)");
        p = 3;
        break;
    case LieFamily::ReeF4:
        if (m < 1)
            throw std::invalid_argument(
                "2F4(2) rejected: the Tits group 2F4(2)' is handled as sporadic");
        p = 2;
        break;
    default:
        throw std::invalid_argument("suzuki_ree() expects 2B2, 2G2 or 2F4");
    }
    return LieFamilySpec{family, 0, pow(BigInt(p), 2 * m + 1), m};
}

LieFamilySpec LieFamilySpec::linear_rank_one(const BigInt& q) {
    require_prime_power(q);
    if (q < 4)
        throw std::invalid_argument("L2(2) and L2(3) rejected: solvable");
    return LieFamilySpec{LieFamily::L2, 0, q, 0};
}

std::string LieFamilySpec::name() const {
    std::ostringstream out;
    out << family_tag(family);
    if (rank)
        out << rank;
    out << '(' << q << ')';
    return out.str();
}

std::optional<std::string> excluded_isomorphism(const LieFamilySpec& spec) {
    if (spec.family == LieFamily::L2) {
        if (spec.q == 4)
            return "L2(4) is isomorphic to A5";
        if (spec.q == 5)
            return "L2(5) is isomorphic to A5";
        if (spec.q == 9)
            return "L2(9) is isomorphic to A6";
    }
    if (spec.family == LieFamily::A && spec.rank == 4 && spec.q == 2)
        return "L4(2) is isomorphic to A8";
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Degree formulas

namespace {

BigInt exact_div(const BigInt& numerator_value, const BigInt& denominator_value,
                 const std::string& what) {
    if (numerator_value % denominator_value != 0)
        throw integrality_error(what + ": " + numerator_value.str() +
                                " not divisible by " + denominator_value.str());
    return numerator_value / denominator_value;
}

// q as an element of Q(sqrt p): p^m * sqrt(p) for field size p^{2m+1}.
QuadraticSurd twisted_parameter(unsigned p, unsigned m) {
    return QuadraticSurd(BigRational(0), BigRational(pow(BigInt(p), m)), p);
}

} // namespace

BigInt steinberg_degree(const LieFamilySpec& spec) {
    const BigInt& q = spec.q;
    const unsigned n = spec.rank;
    switch (spec.family) {
    case LieFamily::A:
    case LieFamily::TwistedA:
        return pow(q, n * (n - 1) / 2);
    case LieFamily::B:
    case LieFamily::C:
        return pow(q, n * n);
    case LieFamily::D:
    case LieFamily::TwistedD:
        return pow(q, n * (n - 1));
    case LieFamily::G2:
        return pow(q, 6);
    case LieFamily::TwistedD4:
        return pow(q, 12);
    case LieFamily::F4:
        return pow(q, 24);
    case LieFamily::E6:
    case LieFamily::TwistedE6:
        return pow(q, 36);
    case LieFamily::E7:
        return pow(q, 63);
    case LieFamily::E8:
        return pow(q, 120);
    case LieFamily::SuzukiB2:
        return q * q; // field size squared
    case LieFamily::ReeG2:
        return q * q * q;
    case LieFamily::ReeF4:
        return pow(q, 12);
    case LieFamily::L2:
        return q;
    }
    throw std::logic_error("unreachable steinberg case");
}

BigInt subunipotent_degree(const LieFamilySpec& spec) {
    const BigInt& q = spec.q;
    const unsigned n = spec.rank;
    switch (spec.family) {
    case LieFamily::A:
        return exact_div(pow(q, n) - q, q - 1, spec.name());
    case LieFamily::TwistedA: {
        const BigInt sign = (n % 2 == 0) ? 1 : -1;
        return exact_div(pow(q, n) + sign * q, q + 1, spec.name());
    }
    case LieFamily::B:
    case LieFamily::C:
        return exact_div((pow(q, n) - 1) * (pow(q, n) - q), 2 * (q + 1), spec.name());
    case LieFamily::D:
        return exact_div((pow(q, n) - 1) * (pow(q, n - 1) + q), q * q - 1, spec.name());
    case LieFamily::TwistedD:
        return exact_div((pow(q, n) + 1) * (pow(q, n - 1) - q), q * q - 1, spec.name());
    case LieFamily::G2:
        return exact_div(q * pow(cyclotomic_value(2, q), 2) * cyclotomic_value(3, q),
                         6, spec.name());
    case LieFamily::TwistedD4:
        return q * cyclotomic_value(12, q);
    case LieFamily::F4:
        return q * q * pow(cyclotomic_value(3, q), 2) * pow(cyclotomic_value(6, q), 2) *
               cyclotomic_value(12, q);
    case LieFamily::E6:
        return q * cyclotomic_value(8, q) * cyclotomic_value(9, q);
    case LieFamily::TwistedE6:
        return q * cyclotomic_value(8, q) * cyclotomic_value(18, q);
    case LieFamily::E7:
        return q * cyclotomic_value(7, q) * cyclotomic_value(12, q) *
               cyclotomic_value(14, q);
    case LieFamily::E8:
        return q * pow(cyclotomic_value(4, q), 2) * cyclotomic_value(8, q) *
               cyclotomic_value(12, q) * cyclotomic_value(20, q) *
               cyclotomic_value(24, q);
    case LieFamily::SuzukiB2: {
        const QuadraticSurd qh = twisted_parameter(2, spec.twist_m);
        const QuadraticSurd value =
            qh * cyclotomic_value(1, qh) * cyclotomic_value(2, qh);
        return value.over_root().to_integer();
    }
    case LieFamily::ReeG2: {
        const QuadraticSurd qh = twisted_parameter(3, spec.twist_m);
        const QuadraticSurd value = qh * cyclotomic_value(1, qh) *
                                    cyclotomic_value(2, qh) * cyclotomic_value(4, qh);
        return value.over_root().to_integer();
    }
    case LieFamily::ReeF4: {
        const QuadraticSurd qh = twisted_parameter(2, spec.twist_m);
        // The final cyclotomic factor is taken at the field size q^2; taken
        // at q itself the product cannot collapse to an integer.
        const QuadraticSurd phi6_at_field =
            QuadraticSurd::from_integer(cyclotomic_value(6, spec.q), 2);
        const QuadraticSurd phi4 = cyclotomic_value(4, qh);
        const QuadraticSurd value = qh * cyclotomic_value(1, qh) *
                                    cyclotomic_value(2, qh) * phi4 * phi4 *
                                    phi6_at_field;
        return value.over_root().to_integer();
    }
    case LieFamily::L2:
        throw std::invalid_argument("no sub-Steinberg unipotent degree for L2");
    }
    throw std::logic_error("unreachable subunipotent case");
}

bool verify_sandwich(const LieFamilySpec& spec) {
    if (spec.family == LieFamily::L2)
        throw std::invalid_argument("sandwich check undefined for L2");
    if (auto reason = excluded_isomorphism(spec))
        throw std::invalid_argument(*reason);
    const BigInt chi1 = subunipotent_degree(spec);
    return 1 < chi1 && chi1 < steinberg_degree(spec);
}

std::vector<BigInt> l2_guaranteed_degrees(const BigInt& q, L2Range range) {
    if (q < 7)
        throw std::invalid_argument("l2_guaranteed_degrees requires q >= 7");
    auto decomposition = prime_power_decompose(q);
    if (!decomposition)
        throw std::invalid_argument("q must be a prime power");
    const BigInt& p = decomposition->prime;

    if (p != 3) {
        // q is never divisible by 3 here, so q = +-1 (mod 3).
        const int delta = (q % 3 == 1) ? 1 : -1;
        return {q + delta};
    }
    const int eps = (q % 4 == 1) ? 1 : -1;
    switch (range) {
    case L2Range::WithinPgl:
        return {q - 1, q + 1};
    case L2Range::WithinPgammal:
        return {(q + eps) / 2};
    case L2Range::AbovePgl:
        return {q + eps};
    case L2Range::Generic:
        return {(q + eps) / 2, q + eps};
    }
    throw std::logic_error("unreachable L2 range");
}

std::vector<SandwichResult> sandwich_grid() {
    static const BigInt q_values[] = {2, 3, 4, 5, 7, 8, 9};
    std::vector<SandwichResult> results;

    auto evaluate = [&](auto&& make, const std::string& fallback_name) {
        SandwichResult r;
        try {
            const LieFamilySpec spec = make();
            r.name = spec.name();
            if (auto reason = excluded_isomorphism(spec)) {
                r.skipped = true;
                r.skip_reason = *reason;
            } else {
                r.chi1 = subunipotent_degree(spec);
                r.steinberg = steinberg_degree(spec);
                r.ok = 1 < r.chi1 && r.chi1 < r.steinberg;
            }
        } catch (const std::invalid_argument& e) {
            r.name = fallback_name;
            r.skipped = true;
            r.skip_reason = e.what();
        }
        results.push_back(std::move(r));
    };

    auto classical_name = [](LieFamily f, unsigned n, const BigInt& q) {
        std::ostringstream out;
        out << family_tag(f) << n << '(' << q << ')';
        return out.str();
    };

    for (LieFamily f : {LieFamily::A, LieFamily::TwistedA})
        for (unsigned n = 3; n <= 8; ++n)
            for (const BigInt& q : q_values)
                evaluate([&] { return LieFamilySpec::classical(f, n, q); },
                         classical_name(f, n, q));
    for (LieFamily f : {LieFamily::B, LieFamily::C})
        for (unsigned n = 2; n <= 6; ++n)
            for (const BigInt& q : q_values)
                evaluate([&] { return LieFamilySpec::classical(f, n, q); },
                         classical_name(f, n, q));
    for (LieFamily f : {LieFamily::D, LieFamily::TwistedD})
        for (unsigned n = 4; n <= 7; ++n)
            for (const BigInt& q : q_values)
                evaluate([&] { return LieFamilySpec::classical(f, n, q); },
                         classical_name(f, n, q));
    for (LieFamily f : {LieFamily::G2, LieFamily::TwistedD4, LieFamily::F4,
                        LieFamily::E6, LieFamily::TwistedE6, LieFamily::E7,
                        LieFamily::E8})
        for (const BigInt& q : q_values) {
            if (f == LieFamily::G2 && q < 3)
                continue; // the G2 grid starts at q = 3
            evaluate([&] { return LieFamilySpec::exceptional(f, q); },
                     std::string(family_tag(f)) + "(" + q.str() + ")");
        }
    for (LieFamily f : {LieFamily::SuzukiB2, LieFamily::ReeG2, LieFamily::ReeF4})
        for (unsigned m = 1; m <= 3; ++m)
            evaluate([&] { return LieFamilySpec::suzuki_ree(f, m); },
                     std::string(family_tag(f)) + "[m=" + std::to_string(m) + "]");
    return results;
}

} // namespace degpat

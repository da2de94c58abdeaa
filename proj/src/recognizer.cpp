#include "degpat/recognizer.hpp"

#include <algorithm>
#include <sstream>

#include "degpat/alt_degrees.hpp"
#include "degpat/numtheory.hpp"
#include "degpat/sym_degrees.hpp"

namespace degpat {

std::string to_string(RejectionStage stage) {
    switch (stage) {
    case RejectionStage::UnitMultiplicity: return "unit-multiplicity";
    case RejectionStage::OrderNotFactorial: return "order-not-factorial";
    case RejectionStage::PatternMismatch: return "pattern-mismatch";
    }
    throw std::logic_error("unreachable rejection stage");
}

std::string RecognitionReport::machine_line() const {
    std::ostringstream out;
    out << "verdict=" << (accepted ? "accepted" : "rejected");
    if (accepted) {
        out << " n=" << n;
        return out.str();
    }
    out << " stage=" << to_string(*stage);
    if (stage == RejectionStage::PatternMismatch && witness) {
        out << " n=" << n << " degree=" << witness->degree
            << " expected=" << witness->expected << " found=" << witness->found;
    } else if (!detail.empty()) {
        out << " detail=" << detail;
    }
    return out.str();
}

namespace {

RecognitionReport accept(unsigned n) {
    RecognitionReport report;
    report.accepted = true;
    report.n = n;
    return report;
}

RecognitionReport reject(RejectionStage stage, std::string detail) {
    RecognitionReport report;
    report.stage = stage;
    report.detail = std::move(detail);
    return report;
}

} // namespace

RecognitionReport recognize(const DegreePattern& input) {
    if (input.empty())
        throw std::invalid_argument("cannot recognize an empty pattern");

    // X_1(S_1) = {1} is the one pattern with a single trivial entry.
    if (input.class_count() == 1 && input.contains_degree(1))
        return accept(1);

    const std::uint64_t units = input.multiplicity_of(1);
    if (units != 2) {
        std::ostringstream detail;
        detail << "multiplicity of degree 1 is " << units << ", not 2";
        return reject(RejectionStage::UnitMultiplicity, detail.str());
    }

    const BigInt& order = input.group_order();
    const auto n = factorial_inverse(order);
    if (!n) {
        std::ostringstream detail;
        detail << "order " << order << " is not a factorial";
        return reject(RejectionStage::OrderNotFactorial, detail.str());
    }
    if (*n > enumeration_cap()) {
        std::ostringstream msg;
        msg << "implied n=" << *n << " exceeds the enumeration cap of "
            << enumeration_cap();
        throw enumeration_limit_error(msg.str());
    }

    const DegreePattern& expected = degree_pattern(*n);
    if (input == expected)
        return accept(*n);

    // Locate the smallest degree where the multisets differ.
    RecognitionReport report = reject(RejectionStage::PatternMismatch, {});
    report.n = *n;
    auto it_in = input.entries().begin();
    auto it_ex = expected.entries().begin();
    PatternMismatchWitness witness;
    for (;;) {
        if (it_ex == expected.entries().end()) {
            witness = {it_in->first, 0, it_in->second};
            break;
        }
        if (it_in == input.entries().end()) {
            witness = {it_ex->first, it_ex->second, 0};
            break;
        }
        if (it_in->first < it_ex->first) {
            witness = {it_in->first, 0, it_in->second};
            break;
        }
        if (it_ex->first < it_in->first) {
            witness = {it_ex->first, it_ex->second, 0};
            break;
        }
        if (it_in->second != it_ex->second) {
            witness = {it_in->first, it_ex->second, it_in->second};
            break;
        }
        ++it_in;
        ++it_ex;
    }
    std::ostringstream detail;
    detail << "degree " << witness.degree << " has multiplicity " << witness.found
           << ", X_1(S_" << *n << ") wants " << witness.expected;
    report.detail = detail.str();
    report.witness = witness;
    return report;
}

SubsetDiagnostic subset_diagnostic(const DegreePattern& pattern, unsigned n) {
    SubsetDiagnostic diag;
    const DegreePattern& reference = degree_pattern(n);
    for (const auto& [degree, mult] : pattern.entries()) {
        if (!reference.contains_degree(degree)) {
            diag.subset_ok = false;
            diag.first_missing_degree = degree;
            break;
        }
    }
    const std::size_t limit =
        std::min(pattern.nontrivial_degree_count(), reference.nontrivial_degree_count());
    for (std::size_t i = 1; i <= limit; ++i) {
        const BigInt& have = pattern.nth_smallest_nontrivial(i);
        const BigInt& need = reference.nth_smallest_nontrivial(i);
        if (have < need) {
            diag.monotone_ok = false;
            diag.first_monotone_index = i;
            diag.monotone_value = have;
            diag.monotone_minimum = need;
            break;
        }
    }
    return diag;
}

WreathReport wreath_constraint_check(const std::vector<BigInt>& cd_socle, unsigned n) {
    bool has_nontrivial = false;
    WreathReport report;
    report.n = n;
    const DegreePattern& reference = degree_pattern(n);
    std::vector<BigInt> primes_seen;
    for (const BigInt& a : cd_socle) {
        if (a <= 1)
            continue;
        has_nontrivial = true;
        if (!reference.contains_degree(2 * a))
            report.violations.push_back(
                {WreathViolation::Kind::MissingDouble, a, 2 * a});
        if (!reference.contains_degree(a * a))
            report.violations.push_back(
                {WreathViolation::Kind::MissingSquare, a, a * a});
        for (const BigInt& r : distinct_prime_divisors(a)) {
            bool seen = false;
            for (const BigInt& old : primes_seen)
                if (old == r)
                    seen = true;
            if (seen)
                continue;
            primes_seen.push_back(r);
            // a^2 | n! forces r^2 | n!, equivalent to n >= 2r.
            if (BigInt(n) < 2 * r)
                report.violations.push_back(
                    {WreathViolation::Kind::PrimeBound, r, 2 * r});
        }
    }
    if (!has_nontrivial)
        throw std::invalid_argument("socle degree set needs a nontrivial degree");
    return report;
}

AltSeparationReport alt_double_separation(unsigned n) {
    if (n < 5)
        throw std::invalid_argument("alt_double_separation requires n >= 5");
    AltSeparationReport report;
    report.n = n;
    report.sym_classes = class_count(n);
    report.alt_classes = alt_class_count(n);
    report.self_conjugate_count = count_self_conjugate(n);
    report.gap = 2 * report.alt_classes - report.sym_classes;
    report.identity_holds =
        report.sym_classes == 2 * report.alt_classes - 3 * report.self_conjugate_count;
    report.doubled_alt_order_matches =
        doubled_alt_pattern(n).group_order() == factorial(n);
    if (!report.identity_holds || report.gap < 3)
        throw std::logic_error("class-count separation failed; splitting rule bug");
    return report;
}

DegreePattern doubled_alt_pattern(unsigned n) {
    DegreePattern doubled;
    for (const auto& [degree, mult] : alt_degree_pattern(n).entries())
        doubled.add(degree, 2 * mult);
    return doubled;
}

} // namespace degpat

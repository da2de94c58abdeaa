#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "degpat/alt_degrees.hpp"
#include "degpat/numtheory.hpp"
#include "degpat/recognizer.hpp"
#include "degpat/sym_degrees.hpp"

using namespace degpat;

namespace {

DegreePattern pattern_of(std::initializer_list<std::pair<int, int>> entries) {
    DegreePattern p;
    for (const auto& [d, m] : entries)
        p.add(BigInt(d), static_cast<std::uint64_t>(m));
    return p;
}

} // namespace

TEST_CASE("accepts the genuine patterns") {
    for (unsigned n = 1; n <= 25; ++n) {
        const auto report = recognize(degree_pattern(n));
        CHECK(report.accepted);
        CHECK(report.n == n);
    }
    CHECK(recognize(pattern_of({{1, 1}})).n == 1);
    CHECK(recognize(pattern_of({{1, 2}})).n == 2);
    CHECK(recognize(pattern_of({{1, 2}, {2, 1}})).n == 3);
}

TEST_CASE("stage 1: unit multiplicity") {
    const auto r = recognize(pattern_of({{1, 3}, {2, 4}}));
    CHECK_FALSE(r.accepted);
    CHECK(r.stage == RejectionStage::UnitMultiplicity);

    const auto r2 = recognize(pattern_of({{2, 1}}));
    CHECK(r2.stage == RejectionStage::UnitMultiplicity);
}

TEST_CASE("stage 2: order must be a factorial") {
    const auto r = recognize(pattern_of({{1, 2}, {3, 1}})); // order 11
    CHECK_FALSE(r.accepted);
    CHECK(r.stage == RejectionStage::OrderNotFactorial);
    CHECK(r.machine_line().find("order-not-factorial") != std::string::npos);
}

TEST_CASE("stage 3: multiset mismatch with smallest witness") {
    // A_5 x Z_2 pattern: order passes (120 = 5!), content does not.
    const auto r = recognize(pattern_of({{1, 2}, {3, 4}, {4, 2}, {5, 2}}));
    CHECK_FALSE(r.accepted);
    CHECK(r.stage == RejectionStage::PatternMismatch);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->degree == 3);
    CHECK(r.witness->expected == 0);
    CHECK(r.witness->found == 4);
    CHECK(r.n == 5);
}

TEST_CASE("cap overflow is an error, not a rejection") {
    const DegreePattern genuine = degree_pattern(11); // copy before lowering the cap
    const unsigned original = enumeration_cap();
    set_enumeration_cap(10);
    CHECK_THROWS_AS(recognize(genuine), enumeration_limit_error);
    set_enumeration_cap(original);
    CHECK(recognize(genuine).accepted);
}

TEST_CASE("every single mutation of a genuine pattern is rejected") {
    for (unsigned n = 5; n <= 12; ++n) {
        const DegreePattern& genuine = degree_pattern(n);
        const auto degrees = genuine.distinct_degrees();
        for (const BigInt& d : degrees) {
            // (a) remove one entry
            {
                DegreePattern mutated;
                for (const auto& [deg, mult] : genuine.entries()) {
                    const std::uint64_t m = (deg == d) ? mult - 1 : mult;
                    if (m)
                        mutated.add(deg, m);
                }
                CHECK_FALSE(recognize(mutated).accepted);
            }
            // (b) increment one multiplicity
            {
                DegreePattern mutated;
                for (const auto& [deg, mult] : genuine.entries())
                    mutated.add(deg, (deg == d) ? mult + 1 : mult);
                CHECK_FALSE(recognize(mutated).accepted);
            }
            // (c) move one unit of multiplicity from d to d + 1
            {
                DegreePattern mutated;
                for (const auto& [deg, mult] : genuine.entries()) {
                    const std::uint64_t m = (deg == d) ? mult - 1 : mult;
                    if (m)
                        mutated.add(deg, m);
                }
                mutated.add(d + 1, 1);
                CHECK_FALSE(recognize(mutated).accepted);
            }
        }
    }
}

TEST_CASE("doubled alternating patterns are rejected with a witness") {
    for (unsigned n = 5; n <= 15; ++n) {
        const DegreePattern doubled = doubled_alt_pattern(n);
        CHECK(doubled.group_order() == factorial(n));
        const auto report = recognize(doubled);
        CHECK_FALSE(report.accepted);
        CHECK(report.stage == RejectionStage::PatternMismatch);
        CHECK(report.witness.has_value());
    }
}

TEST_CASE("subset diagnostic") {
    SUBCASE("A_6 against S_6: fails at 8") {
        const auto diag = subset_diagnostic(alt_degree_pattern(6), 6);
        CHECK_FALSE(diag.subset_ok);
        CHECK(diag.first_missing_degree == BigInt(8));
    }
    SUBCASE("S_7 against itself: clean") {
        const auto diag = subset_diagnostic(degree_pattern(7), 7);
        CHECK(diag.subset_ok);
        CHECK(diag.monotone_ok);
    }
    SUBCASE("S_8 against S_9: minimal degree too small") {
        const auto diag = subset_diagnostic(degree_pattern(8), 9);
        CHECK_FALSE(diag.monotone_ok);
        CHECK(diag.first_monotone_index == 1);
        CHECK(diag.monotone_value == BigInt(7));
        CHECK(diag.monotone_minimum == BigInt(8));
    }
}

TEST_CASE("wreath constraints") {
    SUBCASE("cd(A_7) doubles against S_13") {
        const auto cd_a7 = alt_degree_pattern(7).distinct_degrees();
        const auto report = wreath_constraint_check(cd_a7, 13);
        CHECK_FALSE(report.ok());
        bool prime_bound_7 = false;
        for (const auto& v : report.violations)
            if (v.kind == WreathViolation::Kind::PrimeBound && v.witness == 7)
                prime_bound_7 = true;
        CHECK(prime_bound_7); // 7 | 14 forces n >= 14 > 13
    }
    SUBCASE("{1,5} against S_10") {
        const auto report = wreath_constraint_check({BigInt(1), BigInt(5)}, 10);
        // 10 and 25 both missing from cd(S_10); prime bound 2*5 = 10 holds
        REQUIRE(report.violations.size() == 2);
        CHECK(report.violations[0].kind == WreathViolation::Kind::MissingDouble);
        CHECK(report.violations[0].value == 10);
        CHECK(report.violations[1].kind == WreathViolation::Kind::MissingSquare);
        CHECK(report.violations[1].value == 25);
    }
    SUBCASE("{1,4} against S_5") {
        const auto report = wreath_constraint_check({BigInt(1), BigInt(4)}, 5);
        bool missing8 = false;
        for (const auto& v : report.violations)
            if (v.kind == WreathViolation::Kind::MissingDouble && v.value == 8)
                missing8 = true;
        CHECK(missing8);
    }
    CHECK_THROWS_AS(wreath_constraint_check({BigInt(1)}, 10), std::invalid_argument);
}

TEST_CASE("class-count separation against the doubled alternating group") {
    const auto r5 = alt_double_separation(5);
    CHECK(r5.sym_classes == 7);
    CHECK(r5.alt_classes == 5);
    CHECK(r5.gap == 3);
    CHECK(r5.identity_holds);
    CHECK(r5.doubled_alt_order_matches);

    const auto r8 = alt_double_separation(8);
    CHECK(r8.gap == 6);

    for (unsigned n = 5; n <= 40; ++n) {
        const auto r = alt_double_separation(n);
        CHECK(r.gap == 3 * count_self_conjugate(n));
        CHECK(r.gap >= 3);
    }
}

TEST_CASE("report rendering is stable") {
    CHECK(recognize(degree_pattern(5)).machine_line() == "verdict=accepted n=5");
    const auto r = recognize(pattern_of({{1, 2}, {3, 4}, {4, 2}, {5, 2}}));
    CHECK(r.machine_line() ==
          "verdict=rejected stage=pattern-mismatch n=5 degree=3 expected=0 found=4");
}

TEST_CASE("empty input is a precondition violation") {
    DegreePattern empty;
    CHECK_THROWS_AS(recognize(empty), std::invalid_argument);
}

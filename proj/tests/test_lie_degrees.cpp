#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "degpat/lie_degrees.hpp"
#include "degpat/rasala.hpp"
#include "oracles.hpp"

using namespace degpat;

TEST_CASE("surd arithmetic") {
    const QuadraticSurd root2 = QuadraticSurd::root(2);
    const QuadraticSurd two = root2 * root2;
    CHECK(two.is_integer());
    CHECK(two.to_integer() == 2);

    const QuadraticSurd a(BigRational(3), BigRational(1), 2);  // 3 + sqrt 2
    const QuadraticSurd b(BigRational(1), BigRational(-1), 2); // 1 - sqrt 2
    const QuadraticSurd prod = a * b; // 1 - 2 sqrt 2
    CHECK(prod.rational_part() == 1);
    CHECK(prod.surd_part() == -2);
    CHECK_FALSE(prod.is_integer());
    CHECK_THROWS_AS(prod.to_integer(), integrality_error);

    CHECK((a + b).rational_part() == 4);
    CHECK((a - b).surd_part() == 2);
    CHECK(root2.over_root().to_integer() == 1);
    CHECK_THROWS_AS(a * QuadraticSurd::root(3), std::invalid_argument);
    CHECK_THROWS_AS(QuadraticSurd::root(5), std::invalid_argument);
}

TEST_CASE("cyclotomic values") {
    CHECK(cyclotomic_value(2, BigInt(3)) == 4);
    CHECK(cyclotomic_value(3, BigInt(3)) == 13);
    CHECK(cyclotomic_value(12, BigInt(2)) == 13);
    CHECK_THROWS_AS(cyclotomic_value(5, BigInt(2)), std::invalid_argument);

    SUBCASE("match the Moebius-product oracle") {
        for (unsigned k : supported_cyclotomic_indices())
            for (BigInt q = 2; q <= 100; ++q)
                CHECK(cyclotomic_value(k, q) == testing::cyclotomic_by_moebius(k, q));
    }

    SUBCASE("divisor product identity where all indices are supported") {
        const std::vector<std::pair<unsigned, std::vector<unsigned>>> splits = {
            {1, {1}},
            {2, {1, 2}},
            {3, {1, 3}},
            {4, {1, 2, 4}},
            {6, {1, 2, 3, 6}},
            {7, {1, 7}},
            {8, {1, 2, 4, 8}},
            {9, {1, 3, 9}},
            {12, {1, 2, 3, 4, 6, 12}},
            {14, {1, 2, 7, 14}},
            {18, {1, 2, 3, 6, 9, 18}},
            {24, {1, 2, 3, 4, 6, 8, 12, 24}},
        };
        for (const auto& [k, divisors] : splits)
            for (BigInt q = 2; q <= 100; ++q) {
                BigInt product = 1;
                for (unsigned d : divisors)
                    product *= cyclotomic_value(d, q);
                CHECK(product == boost::multiprecision::pow(q, k) - 1);
            }
        // q^20 - 1 = (q^10 - 1) * Phi_4 * Phi_20
        for (BigInt q = 2; q <= 100; ++q)
            CHECK((boost::multiprecision::pow(q, 10) - 1) *
                      cyclotomic_value(4, q) * cyclotomic_value(20, q) ==
                  boost::multiprecision::pow(q, 20) - 1);
    }
}

TEST_CASE("steinberg degrees") {
    CHECK(steinberg_degree(LieFamilySpec::classical(LieFamily::A, 3, BigInt(2))) == 8);
    CHECK(steinberg_degree(LieFamilySpec::suzuki_ree(LieFamily::SuzukiB2, 1)) == 64);
    CHECK(steinberg_degree(LieFamilySpec::linear_rank_one(BigInt(9))) == 9);
    CHECK(steinberg_degree(LieFamilySpec::exceptional(LieFamily::E8, BigInt(2))) ==
          boost::multiprecision::pow(BigInt(2), 120));
}

TEST_CASE("sub-Steinberg unipotent degrees") {
    CHECK(subunipotent_degree(LieFamilySpec::classical(LieFamily::A, 3, BigInt(2))) == 6);
    CHECK(subunipotent_degree(LieFamilySpec::exceptional(LieFamily::G2, BigInt(3))) ==
          104);
    CHECK(subunipotent_degree(LieFamilySpec::suzuki_ree(LieFamily::SuzukiB2, 1)) == 14);
    CHECK(subunipotent_degree(LieFamilySpec::classical(LieFamily::B, 2, BigInt(3))) == 6);
    CHECK(subunipotent_degree(LieFamilySpec::classical(LieFamily::TwistedA, 3,
                                                       BigInt(2))) == 2);
    CHECK_THROWS_AS(subunipotent_degree(LieFamilySpec::linear_rank_one(BigInt(7))),
                    std::invalid_argument);
}

TEST_CASE("sandwich verification") {
    CHECK(verify_sandwich(LieFamilySpec::exceptional(LieFamily::G2, BigInt(3))));
    CHECK(verify_sandwich(LieFamilySpec::suzuki_ree(LieFamily::SuzukiB2, 1)));
    CHECK(verify_sandwich(LieFamilySpec::classical(LieFamily::B, 2, BigInt(3))));
}

TEST_CASE("full grid sandwich and Suzuki-Ree integrality") {
    const auto grid = sandwich_grid();
    CHECK(grid.size() > 100);
    std::size_t skipped = 0;
    for (const auto& entry : grid) {
        if (entry.skipped) {
            ++skipped;
            CHECK_FALSE(entry.skip_reason.empty());
            continue;
        }
        CHECK(entry.chi1 > 1);
        CHECK(entry.chi1 < entry.steinberg);
        CHECK(entry.ok);
    }
    // L4(2) = A4(2) and the two B/C rank-2 entries at q=2
    CHECK(skipped == 3);

    for (unsigned m = 1; m <= 3; ++m) {
        CHECK_NOTHROW(
            subunipotent_degree(LieFamilySpec::suzuki_ree(LieFamily::SuzukiB2, m)));
        CHECK_NOTHROW(
            subunipotent_degree(LieFamilySpec::suzuki_ree(LieFamily::ReeG2, m)));
        CHECK_NOTHROW(
            subunipotent_degree(LieFamilySpec::suzuki_ree(LieFamily::ReeF4, m)));
    }
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(LieFamilySpec::classical(LieFamily::A, 2, BigInt(4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(LieFamilySpec::classical(LieFamily::B, 2, BigInt(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(LieFamilySpec::classical(LieFamily::D, 3, BigInt(3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(LieFamilySpec::exceptional(LieFamily::G2, BigInt(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(LieFamilySpec::suzuki_ree(LieFamily::SuzukiB2, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(LieFamilySpec::linear_rank_one(BigInt(3)), std::invalid_argument);
    CHECK_THROWS_AS(LieFamilySpec::classical(LieFamily::A, 3, BigInt(6)),
                    std::invalid_argument);

    CHECK(excluded_isomorphism(LieFamilySpec::linear_rank_one(BigInt(9))).has_value());
    CHECK(excluded_isomorphism(LieFamilySpec::linear_rank_one(BigInt(4))).has_value());
    CHECK(
        excluded_isomorphism(LieFamilySpec::classical(LieFamily::A, 4, BigInt(2)))
            .has_value());
    CHECK_FALSE(
        excluded_isomorphism(LieFamilySpec::linear_rank_one(BigInt(7))).has_value());

    CHECK(LieFamilySpec::classical(LieFamily::TwistedD, 4, BigInt(3)).name() ==
          "2D4(3)");
    CHECK(LieFamilySpec::suzuki_ree(LieFamily::SuzukiB2, 1).name() == "2B2(8)");
}

TEST_CASE("guaranteed degrees of rank-one linear socles") {
    CHECK(l2_guaranteed_degrees(BigInt(7), L2Range::Generic) ==
          std::vector<BigInt>{8}); // 7 = 1 (mod 3)
    CHECK(l2_guaranteed_degrees(BigInt(8), L2Range::Generic) ==
          std::vector<BigInt>{7}); // 8 = 2 (mod 3)
    CHECK(l2_guaranteed_degrees(BigInt(11), L2Range::Generic) ==
          std::vector<BigInt>{10});
    CHECK(l2_guaranteed_degrees(BigInt(9), L2Range::WithinPgammal) ==
          std::vector<BigInt>{5});
    CHECK(l2_guaranteed_degrees(BigInt(9), L2Range::AbovePgl) ==
          std::vector<BigInt>{10});
    CHECK(l2_guaranteed_degrees(BigInt(9), L2Range::WithinPgl) ==
          std::vector<BigInt>{8, 10});
    CHECK(l2_guaranteed_degrees(BigInt(27), L2Range::WithinPgammal) ==
          std::vector<BigInt>{13}); // 27 = 3 (mod 4)
    CHECK_THROWS_AS(l2_guaranteed_degrees(BigInt(5), L2Range::Generic),
                    std::invalid_argument);
    CHECK_THROWS_AS(l2_guaranteed_degrees(BigInt(10), L2Range::Generic),
                    std::invalid_argument);
}

TEST_CASE("rank-one elimination inequality") {
    // with n - 1 = q >= 7: d_2 form at n exceeds q + 1, which exceeds q
    for (long long q : {7, 8, 9, 11, 13}) {
        const BigInt d2 = rasala_forms()[1].value_at(q + 1);
        CHECK(d2 == (q + 1) * (q - 2) / 2);
        CHECK(d2 > q + 1);
        CHECK(BigInt(q + 1) > q);
    }
}

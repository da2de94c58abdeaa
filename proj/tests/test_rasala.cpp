#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "degpat/rasala.hpp"
#include "degpat/sym_degrees.hpp"

using namespace degpat;

TEST_CASE("closed-form values") {
    CHECK(rasala_value(1, 15) == 14);
    CHECK(rasala_value(2, 32) == 464);
    CHECK(rasala_value(3, 20) == rasala_value(2, 20) + 1);
    CHECK(rasala_value(4, 15) == 350);
    CHECK(rasala_value(7, 22) == 22 * 21 * 20 * 15 / 24);
    CHECK(rasala_value(11, 22) == 22 * 20 * 19 * 17 / 8);
    CHECK_THROWS_AS(rasala_value(2, 14), window_error);
    CHECK_THROWS_AS(rasala_value(7, 21), window_error);
    CHECK_THROWS_AS(rasala_value(12, 30), std::out_of_range);
}

TEST_CASE("closed forms reproduce brute force on their windows") {
    for (unsigned n = 15; n <= 40; ++n)
        for (int i = 1; i <= 6; ++i)
            CHECK(rasala_value(i, n) == nth_smallest_degree(n, i));
    for (unsigned n = 22; n <= 40; ++n)
        for (int i = 7; i <= 11; ++i)
            CHECK(rasala_value(i, n) == nth_smallest_degree(n, i));
}

TEST_CASE("strict monotonicity in the index") {
    for (unsigned n = 22; n <= 40; ++n)
        for (int i = 1; i < 11; ++i)
            CHECK(rasala_value(i, n) < rasala_value(i + 1, n));
}

TEST_CASE("minimal_degree falls back to brute force below the window") {
    CHECK(minimal_degree(2, 8) == 14); // the closed form would give 20
    CHECK(rasala_forms()[1].value_at(8) == 20);
    CHECK_FALSE(closed_form_applies(2, 8));
    CHECK(closed_form_applies(2, 15));
    CHECK(minimal_degree(1, 5) == 4);
    CHECK(minimal_degree(2, 9) == 27);
    for (unsigned n = 5; n <= 14; ++n)
        for (int i = 1; i <= 3; ++i)
            CHECK(minimal_degree(i, n) == nth_smallest_degree(n, i));
    CHECK_THROWS_AS(minimal_degree(4, 5), std::out_of_range); // cd(S_5) has 3
}

TEST_CASE("degree equations") {
    CHECK(solve_degree_equation(1, BigInt(196883)) ==
          std::vector<long long>{196884});
    CHECK(solve_degree_equation(2, BigInt(464)) == std::vector<long long>{32});
    CHECK(solve_degree_equation(2, BigInt(465)).empty());
    CHECK(solve_degree_equation(9, BigInt(62496)) == std::vector<long long>{32});

    // below the window's first value
    CHECK(solve_degree_equation(1, BigInt(7)).empty());

    for (int i = 1; i <= 11; ++i) {
        const long long window = rasala_forms()[i - 1].min_valid_n;
        for (long long n = window; n <= 1000; ++n) {
            const auto solutions = solve_degree_equation(i, rasala_value(i, n));
            CHECK(solutions == std::vector<long long>{n});
        }
    }
}

TEST_CASE("form metadata") {
    const auto& forms = rasala_forms();
    CHECK(forms.size() == 11);
    for (int i = 1; i <= 11; ++i) {
        CHECK(forms[i - 1].index == i);
        CHECK(forms[i - 1].min_valid_n == (i <= 6 ? 15u : 22u));
        CHECK(forms[i - 1].labels[0].size() > 0);
    }
}

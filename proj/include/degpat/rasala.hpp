#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "degpat/bigint.hpp"

namespace degpat {

/// Thrown when a closed form is evaluated below its validity window.
class window_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Closed form for the i-th smallest nontrivial degree of S_n:
/// product of (n - offset) over the offsets, divided by an integer.
/// Valid as the true d_i from min_valid_n on (15 for i <= 6, 22 above).
struct RasalaForm {
    int index;                      // 1..11
    std::vector<unsigned> offsets;  // value = prod(n - o) / divisor
    unsigned divisor;
    unsigned min_valid_n;
    std::string formula;            // display form, e.g. "n(n-3)/2"
    std::array<std::string, 2> labels; // the two partition shapes realizing it

    /// Evaluates the form at any integer n, with no window check; asserts
    /// exact divisibility by the divisor.
    BigInt value_at(long long n) const;
};

const std::array<RasalaForm, 11>& rasala_forms();

/// Closed-form d_i(S_n), window-enforced (throws window_error below it).
BigInt rasala_value(int i, long long n);

/// True i-th smallest nontrivial degree of S_n: the closed form on its
/// window, brute force from the degree pattern below it (the forms are
/// false for small n, e.g. the i=2 form gives 20 at n=8 where the true
/// value is 14).
BigInt minimal_degree(int i, unsigned n);

/// Whether minimal_degree(i, n) comes from the closed form.
bool closed_form_applies(int i, unsigned n);

/// All n >= min_valid_n(i) with rasala_value(i, n) = target, found by
/// monotone integer bisection; at most one solution since every form is
/// strictly increasing on its window.
std::vector<long long> solve_degree_equation(int i, const BigInt& target);

} // namespace degpat

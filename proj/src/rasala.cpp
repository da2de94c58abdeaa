#include "degpat/rasala.hpp"

#include <sstream>

#include "degpat/sym_degrees.hpp"

namespace degpat {

BigInt RasalaForm::value_at(long long n) const {
    BigInt product = 1;
    for (unsigned offset : offsets)
        product *= BigInt(n) - offset;
    if (product % divisor != 0) {
        std::ostringstream msg;
        msg << "form d_" << index << " not integral at n=" << n;
        throw std::logic_error(msg.str());
    }
    return product / divisor;
}

const std::array<RasalaForm, 11>& rasala_forms() {
    static const std::array<RasalaForm, 11> forms = {{
        {1, {1}, 1, 15, "n-1", {"(n-1,1)", "(2,1^{n-2})"}},
        {2, {0, 3}, 2, 15, "n(n-3)/2", {"(n-2,2)", "(2^2,1^{n-4})"}},
        {3, {1, 2}, 2, 15, "(n-1)(n-2)/2", {"(n-2,1^2)", "(3,1^{n-3})"}},
        {4, {0, 1, 5}, 6, 15, "n(n-1)(n-5)/6", {"(n-3,3)", "(2^3,1^{n-6})"}},
        {5, {1, 2, 3}, 6, 15, "(n-1)(n-2)(n-3)/6", {"(n-3,1^3)", "(4,1^{n-4})"}},
        {6, {0, 2, 4}, 3, 15, "n(n-2)(n-4)/3", {"(n-3,2,1)", "(3,2,1^{n-5})"}},
        {7, {0, 1, 2, 7}, 24, 22, "n(n-1)(n-2)(n-7)/24", {"(n-4,4)", "(2^4,1^{n-8})"}},
        {8, {1, 2, 3, 4}, 24, 22, "(n-1)(n-2)(n-3)(n-4)/24", {"(n-4,1^4)", "(5,1^{n-5})"}},
        {9, {0, 1, 4, 5}, 12, 22, "n(n-1)(n-4)(n-5)/12", {"(n-4,2^2)", "(3^2,1^{n-6})"}},
        {10, {0, 1, 3, 6}, 8, 22, "n(n-1)(n-3)(n-6)/8", {"(n-4,3,1)", "(3,2^2,1^{n-7})"}},
        {11, {0, 2, 3, 5}, 8, 22, "n(n-2)(n-3)(n-5)/8", {"(n-4,2,1^2)", "(4,2,1^{n-6})"}},
    }};
    return forms;
}

namespace {

const RasalaForm& form_for(int i) {
    if (i < 1 || i > 11)
        throw std::out_of_range("closed forms exist for indices 1..11");
    return rasala_forms()[static_cast<std::size_t>(i - 1)];
}

} // namespace

BigInt rasala_value(int i, long long n) {
    const RasalaForm& form = form_for(i);
    if (n < static_cast<long long>(form.min_valid_n)) {
        std::ostringstream msg;
        msg << "d_" << i << " closed form is only valid for n >= "
            << form.min_valid_n << " (got n=" << n << ")";
        throw window_error(msg.str());
    }
    return form.value_at(n);
}

bool closed_form_applies(int i, unsigned n) {
    return n >= form_for(i).min_valid_n;
}

BigInt minimal_degree(int i, unsigned n) {
    if (i < 1)
        throw std::out_of_range("degree indices start at 1");
    if (i <= 11 && closed_form_applies(i, n))
        return rasala_value(i, n);
    return nth_smallest_degree(n, static_cast<std::size_t>(i));
}

std::vector<long long> solve_degree_equation(int i, const BigInt& target) {
    if (target < 1)
        throw std::invalid_argument("target degree must be positive");
    const RasalaForm& form = form_for(i);
    const long long lo_bound = form.min_valid_n;
    if (form.value_at(lo_bound) > target)
        return {};
    // Strictly increasing on the window, so double an upper bound and bisect.
    long long hi = lo_bound;
    while (form.value_at(hi) < target)
        hi *= 2;
    long long lo = lo_bound;
    while (lo < hi) {
        const long long mid = lo + (hi - lo) / 2;
        if (form.value_at(mid) < target)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (form.value_at(lo) == target)
        return {lo};
    return {};
}

} // namespace degpat

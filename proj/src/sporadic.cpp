#include "degpat/sporadic.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "degpat/numtheory.hpp"
#include "degpat/rasala.hpp"

namespace degpat {

const std::array<SporadicRecord, 40>& sporadic_table() {
    static const std::array<SporadicRecord, 40> table = {{
        {"M11", 11, 10, 11, 16, false},
        {"M12", 11, 11, 16, 45, true},
        {"M12.2", 11, 22, 32, 45, false},
        {"J1", 19, 56, 76, 77, false},
        {"M22", 11, 21, 45, 55, true},
        {"M22.2", 11, 21, 45, 55, false},
        {"J2", 7, 14, 21, 36, true},
        {"J2.2", 7, 28, 36, 42, false},
        {"M23", 23, 22, 45, 230, false},
        {"HS", 11, 22, 77, 154, true},
        {"HS.2", 11, 22, 77, 154, false},
        {"J3", 19, 85, 323, 324, true},
        {"J3.2", 19, 170, 324, 646, false},
        {"M24", 23, 23, 45, 231, false},
        {"McL", 11, 22, 231, 252, true},
        {"McL.2", 11, 22, 231, 252, false},
        {"He", 17, 51, 153, 680, true},
        {"He.2", 17, 102, 306, 680, false},
        {"Ru", 29, 378, 406, 783, false},
        {"Suz", 13, 143, 364, 780, true},
        {"Suz.2", 13, 143, 364, 780, false},
        {"O'N", 31, 10944, 13376, 25916, true},
        {"O'N.2", 31, 10944, 26752, 37696, false},
        {"Co3", 23, 23, 253, 275, false},
        {"Co2", 23, 23, 253, 275, false},
        {"Fi22", 13, 78, 429, 1001, true},
        {"Fi22.2", 13, 78, 429, 1001, false},
        {"HN", 19, 133, 760, 3344, true},
        {"HN.2", 19, 266, 760, 3344, false},
        {"Ly", 67, 2480, 45694, 48174, false},
        {"Th", 31, 248, 4123, 27000, false},
        {"Fi23", 23, 782, 3588, 5083, false},
        {"Co1", 23, 276, 299, 1771, false},
        {"J4", 43, 1333, 299367, 887778, false},
        {"Fi24'", 29, 8671, 57477, 249458, true},
        {"Fi24'.2", 29, 8671, 57477, 249458, false},
        {"B", 47, 4371, 96255, 1139374, false},
        {"M", 71, 196883, 21296876, 842609326, false},
        {"2F4(2)'", 13, 26, 27, 78, true},
        {"2F4(2)'.2", 13, 27, 52, 78, false},
    }};
    return table;
}

const std::vector<SupplementaryDegree>& supplementary_degrees() {
    static const std::vector<SupplementaryDegree> extra = {
        {"O'N", 8, 58311},
        {"O'N", 9, 58653},
        {"O'N.2", 7, 58653},
        {"HN", 7, 16929},
        {"HN.2", 7, 17556},
        {"Ly", 5, 381766},
    };
    return extra;
}

namespace {

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

} // namespace

const SporadicRecord& sporadic_lookup(std::string_view name) {
    for (const auto& record : sporadic_table())
        if (record.name == name)
            return record;
    // Suggest case-insensitive and substring near matches.
    const std::string wanted = ascii_lower(name);
    std::vector<std::string> near;
    for (const auto& record : sporadic_table()) {
        const std::string have = ascii_lower(record.name);
        if (have == wanted || have.find(wanted) != std::string::npos ||
            wanted.find(have) != std::string::npos)
            near.emplace_back(record.name);
    }
    std::ostringstream msg;
    msg << "unknown group '" << name << "'";
    if (!near.empty()) {
        msg << "; did you mean";
        for (const auto& s : near)
            msg << " '" << s << "'";
        msg << "?";
    }
    throw unknown_group_error(msg.str());
}

TableValidationReport validate_sporadic_table() {
    TableValidationReport report;
    auto complain = [&](const std::string& problem) {
        report.ok = false;
        report.problems.push_back(problem);
    };

    const auto& table = sporadic_table();
    if (table.size() != 40)
        complain("expected 40 rows");
    for (const auto& row : table) {
        const std::string name(row.name);
        if (!is_prime(BigInt(row.largest_prime)))
            complain(name + ": largest prime " + std::to_string(row.largest_prime) +
                     " is not prime");
        if (!(1 < row.d1 && row.d1 <= row.d2 && row.d2 <= row.d3))
            complain(name + ": degree chain d1 <= d2 <= d3 broken");
        if (!(row.d1 < row.d3))
            complain(name + ": d1 must be strictly below d3");
        std::size_t occurrences = 0;
        for (const auto& other : table)
            if (other.name == row.name)
                ++occurrences;
        if (occurrences != 1)
            complain(name + ": duplicated row");
        // has_outer_2 must match the presence of a ".2" row.
        bool extension_present = false;
        for (const auto& other : table)
            if (other.name == name + ".2")
                extension_present = true;
        if (row.has_outer_2 != extension_present)
            complain(name + ": has_outer_2 flag disagrees with the row list");
    }
    for (const auto& extra : supplementary_degrees()) {
        bool found = false;
        for (const auto& row : table)
            if (row.name == extra.group)
                found = true;
        if (!found)
            complain(std::string(extra.group) + ": supplementary degree for unknown row");
        if (extra.index < 4 || extra.index > 11)
            complain(std::string(extra.group) +
                     ": supplementary degree index outside 4..11");
    }
    return report;
}

// ---------------------------------------------------------------------------
// Elimination replay

namespace {

struct KnownDegree {
    int index;
    BigInt value;
    std::string label; // "d1", "d2", ...
};

std::vector<KnownDegree> known_degrees(const SporadicRecord& record) {
    std::vector<KnownDegree> known = {
        {1, BigInt(record.d1), "d1"},
        {2, BigInt(record.d2), "d2"},
        {3, BigInt(record.d3), "d3"},
    };
    for (const auto& extra : supplementary_degrees())
        if (extra.group == record.name)
            known.push_back({extra.index, BigInt(extra.value),
                             "d" + std::to_string(extra.index)});
    std::sort(known.begin(), known.end(),
              [](const KnownDegree& a, const KnownDegree& b) { return a.index < b.index; });
    return known;
}

// The 11 minimal degrees of S_n, evaluated once per n.
std::array<BigInt, 11> minimal_degrees_at(long long n) {
    std::array<BigInt, 11> d;
    for (int i = 1; i <= 11; ++i)
        d[static_cast<std::size_t>(i - 1)] = rasala_value(i, n);
    return d;
}

struct CheckOutcome {
    enum Kind { Consistent, Eliminated, Inconclusive } kind = Consistent;
    std::string predicate;
    std::string detail;
};

// value sits in cd(S_n); it must be one of the minimal degrees once a window
// d_k(S_n) > value exists.
CheckOutcome membership_check(const std::string& label, const BigInt& value,
                              long long n, const std::array<BigInt, 11>& d) {
    std::size_t k = 0;
    while (k < d.size() && d[k] <= value)
        ++k;
    if (k == d.size())
        return {CheckOutcome::Inconclusive, {}, {}};
    for (std::size_t i = 0; i < k; ++i)
        if (d[i] == value)
            return {CheckOutcome::Consistent, {}, {}};
    CheckOutcome out;
    out.kind = CheckOutcome::Eliminated;
    out.predicate = label + "-not-representable";
    std::ostringstream detail;
    if (k == 0)
        detail << label << "(S)=" << value << " < d1(S_" << n << ")=" << d[0]
               << ": below every nontrivial degree";
    else
        detail << label << "(S)=" << value << " < d" << (k + 1) << "(S_" << n
               << ")=" << d[k] << " but equals none of d1..d" << k << "(S_" << n
               << ")";
    out.detail = detail.str();
    return out;
}

EliminationStep almost_simple_step(const SporadicRecord& record,
                                   const std::vector<KnownDegree>& known,
                                   long long n) {
    EliminationStep step;
    step.n = n;
    if (record.largest_prime > n) {
        step.eliminated = true;
        step.predicate = "pi-bound";
        std::ostringstream detail;
        detail << "p(S)=" << record.largest_prime << " divides |G| but not " << n
               << "!";
        step.detail = detail.str();
        return step;
    }
    const auto d = minimal_degrees_at(n);
    // cd(G) inside cd(S_n) forces d_i(G) >= d_i(S_n).
    for (const auto& kd : known) {
        if (kd.value < d[static_cast<std::size_t>(kd.index - 1)]) {
            step.eliminated = true;
            step.predicate = "monotonicity-" + kd.label;
            std::ostringstream detail;
            detail << kd.label << "(S)=" << kd.value << " < " << kd.label << "(S_"
                   << n << ")=" << d[static_cast<std::size_t>(kd.index - 1)];
            step.detail = detail.str();
            return step;
        }
    }
    for (const auto& kd : known) {
        const auto outcome = membership_check(kd.label, kd.value, n, d);
        if (outcome.kind == CheckOutcome::Eliminated) {
            step.eliminated = true;
            step.predicate = outcome.predicate;
            step.detail = outcome.detail;
            return step;
        }
    }
    return step; // survivor
}

EliminationStep wreath_square_step(const SporadicRecord& record, long long n) {
    EliminationStep step;
    step.n = n;
    const unsigned long long p = record.largest_prime;
    if (2 * p > static_cast<unsigned long long>(n)) {
        step.eliminated = true;
        step.predicate = "prime-square-bound";
        std::ostringstream detail;
        detail << "r=" << p << " divides a character degree of S, so r^2 | " << n
               << "! requires n >= " << 2 * p;
        step.detail = detail.str();
        return step;
    }
    const auto d = minimal_degrees_at(n);
    const BigInt double_d1 = BigInt(2) * record.d1;
    const BigInt double_d2 = BigInt(2) * record.d2;
    const BigInt square_d1 = BigInt(record.d1) * record.d1;
    if (double_d2 < d[1]) {
        // Two distinct nontrivial degrees of S_n below d2(S_n): impossible.
        step.eliminated = true;
        step.predicate = "pair-below-d2";
        std::ostringstream detail;
        detail << "d2(S_" << n << ")=" << d[1] << " >= p(2p-3)=" << p * (2 * p - 3)
               << " > 2*d2(S)=" << double_d2 << " > 2*d1(S)=" << double_d1
               << " > 1: both doubles sit below d2(S_" << n << ")";
        step.detail = detail.str();
        return step;
    }
    const std::pair<std::string, const BigInt*> values[] = {
        {"2d1", &double_d1}, {"2d2", &double_d2}, {"d1sq", &square_d1}};
    for (const auto& [label, value] : values) {
        const auto outcome = membership_check(label, *value, n, d);
        if (outcome.kind == CheckOutcome::Eliminated) {
            step.eliminated = true;
            step.predicate = outcome.predicate;
            step.detail = outcome.detail;
            return step;
        }
    }
    return step; // survivor
}

void record_step(ChainSummary& summary, EliminationStep step, bool keep_steps) {
    if (step.eliminated) {
        ++summary.predicate_counts[step.predicate];
    } else {
        summary.all_eliminated = false;
        summary.survivors.push_back(step.n);
    }
    if (keep_steps)
        summary.steps.push_back(std::move(step));
}

} // namespace

EliminationReport replay_elimination(std::string_view name, long long n_min,
                                     long long n_max) {
    if (n_min < 32)
        throw std::invalid_argument(
            "replay needs n >= 32 (full minimal-degree window)");
    if (n_max < n_min)
        throw std::invalid_argument("empty replay range");
    const SporadicRecord& record = sporadic_lookup(name);
    const auto known = known_degrees(record);

    EliminationReport report;
    report.group = std::string(record.name);
    report.n_min = n_min;
    report.n_max = n_max;
    const bool keep_steps = (n_max - n_min) < 4096;
    for (long long n = n_min; n <= n_max; ++n) {
        record_step(report.almost_simple, almost_simple_step(record, known, n),
                    keep_steps);
        record_step(report.wreath_square, wreath_square_step(record, n), keep_steps);
    }
    return report;
}

} // namespace degpat

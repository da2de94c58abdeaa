// Command-line front end: emit degree-pattern files, recognize them, print
// the minimal-degree table, run verification sweeps, evaluate Lie-type
// degrees, and replay the embedded eliminations.
//
// Exit codes: 0 success / accepted, 1 rejected or violations found, 2 usage
// or internal error.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "degpat/alt_degrees.hpp"
#include "degpat/lie_degrees.hpp"
#include "degpat/numtheory.hpp"
#include "degpat/rasala.hpp"
#include "degpat/recognizer.hpp"
#include "degpat/sporadic.hpp"
#include "degpat/sym_degrees.hpp"

using namespace degpat;

namespace {

constexpr const char* kCapEnvVar = "DEGPAT_CAP";

struct GlobalOptions {
    std::string format = "text";
    unsigned cap = 0; // 0: leave the default / environment value alone
    bool i_know = false;
    bool machine() const { return format == "machine"; }
};

void apply_cap(const GlobalOptions& opts) {
    if (const char* env = std::getenv(kCapEnvVar)) {
        // the environment variable is an explicit opt-in
        const unsigned long v = std::strtoul(env, nullptr, 10);
        if (v > 0)
            set_enumeration_cap(static_cast<unsigned>(v));
    }
    if (opts.cap == 0)
        return;
    if (opts.cap > kDefaultEnumerationCap && !opts.i_know)
        throw CLI::ValidationError(
            "--cap", "raising the cap above " +
                         std::to_string(kDefaultEnumerationCap) +
                         " needs --i-know (big enumerations ahead)");
    set_enumeration_cap(opts.cap);
}

int run_pattern(unsigned n, const std::string& group, const std::string& output,
                const GlobalOptions& opts) {
    if (n > enumeration_cap()) {
        if (!opts.i_know) {
            std::cerr << "pattern: n=" << n << " is above the cap of "
                      << enumeration_cap() << "; pass --i-know to proceed\n";
            return 2;
        }
        set_enumeration_cap(n);
    }
    const DegreePattern& pattern =
        (group == "alt") ? alt_degree_pattern(n) : degree_pattern(n);
    const std::string comment =
        (group == "alt" ? "X1(A_" : "X1(S_") + std::to_string(n) + ")";
    if (output.empty())
        write_pattern(std::cout, pattern, comment);
    else
        write_pattern_file(output, pattern, comment);
    return 0;
}

int run_recognize(const std::string& path, bool diagnostics,
                  const GlobalOptions& opts) {
    const DegreePattern input = read_pattern_file(path);
    RecognitionReport report;
    try {
        report = recognize(input);
    } catch (const enumeration_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (opts.machine()) {
        std::cout << report.machine_line() << "\n";
    } else if (report.accepted) {
        std::cout << "accepted n=" << report.n << "\n";
    } else {
        std::cout << "rejected stage=" << to_string(*report.stage) << "\n";
        if (!report.detail.empty())
            std::cout << "  " << report.detail << "\n";
    }
    if (diagnostics && !report.accepted &&
        report.stage == RejectionStage::PatternMismatch) {
        const unsigned n = report.n;
        const auto diag = subset_diagnostic(input, n);
        std::cout << "diagnostics against X1(S_" << n << "):\n";
        if (diag.subset_ok)
            std::cout << "  degree set is contained in cd(S_" << n << ")\n";
        else
            std::cout << "  degree " << *diag.first_missing_degree
                      << " is not in cd(S_" << n << ")\n";
        if (!diag.monotone_ok)
            std::cout << "  d_" << *diag.first_monotone_index << " = "
                      << *diag.monotone_value << " < " << *diag.monotone_minimum
                      << " = d_" << *diag.first_monotone_index << "(S_" << n << ")\n";
        std::cout << "  class count " << input.class_count() << " vs k(S_" << n
                  << ") = " << class_count(n) << "\n";
        if (n >= 5) {
            const auto sep = alt_double_separation(n);
            std::cout << "  2k(A_" << n << ") - k(S_" << n << ") = " << sep.gap
                      << " (3 * " << sep.self_conjugate_count
                      << " self-conjugate partitions)\n";
        }
    }
    return report.accepted ? 0 : 1;
}

int run_rasala(unsigned n, const GlobalOptions& opts) {
    for (int i = 1; i <= 11; ++i) {
        BigInt value;
        try {
            value = minimal_degree(i, n);
        } catch (const std::out_of_range&) {
            break; // fewer than i nontrivial degrees at this n
        }
        const bool closed = closed_form_applies(i, n);
        if (opts.machine()) {
            std::cout << "i=" << i << " value=" << value
                      << " source=" << (closed ? "closed-form" : "brute-force")
                      << "\n";
        } else {
            const auto& form = rasala_forms()[i - 1];
            std::cout << "d_" << i << "(S_" << n << ") = " << value << "  ["
                      << (closed ? "closed form " + form.formula : "brute force")
                      << "]  shapes " << form.labels[0] << ", " << form.labels[1]
                      << "\n";
        }
    }
    return 0;
}

int run_verify(const std::string& suite, unsigned max_n) {
    std::vector<std::string> violations;
    if (suite == "lemma2.1") {
        for (unsigned n = 15; n <= max_n; ++n)
            for (int i = 1; i <= (n >= 22 ? 11 : 6); ++i)
                if (rasala_value(i, n) != nth_smallest_degree(n, i))
                    violations.push_back("closed form d_" + std::to_string(i) +
                                         " wrong at n=" + std::to_string(n));
        if (max_n >= 8 && nth_smallest_degree(8, 2) != 14)
            violations.push_back("d_2(S_8) != 14");
    } else if (suite == "lemma2.3") {
        for (unsigned n = 5; n <= max_n; ++n) {
            const auto report = verify_prime_power_classification(n);
            violations.insert(violations.end(), report.violations.begin(),
                              report.violations.end());
        }
    } else if (suite == "lemma2.6") {
        for (unsigned n = 5; n <= max_n; ++n)
            if (degree_prime_support(n) != primes_up_to(n))
                violations.push_back("prime support mismatch at n=" +
                                     std::to_string(n));
    } else if (suite == "identity-k") {
        for (unsigned n = 2; n <= max_n; ++n) {
            if (class_count(n) !=
                2 * alt_class_count(n) - 3 * count_self_conjugate(n))
                violations.push_back("class-count identity fails at n=" +
                                     std::to_string(n));
            if (alt_degree_pattern(n).group_order() * 2 != factorial(n))
                violations.push_back("alternating order wrong at n=" +
                                     std::to_string(n));
        }
    } else {
        std::cerr << "unknown suite '" << suite
                  << "' (expected lemma2.1, lemma2.3, lemma2.6 or identity-k)\n";
        return 2;
    }
    for (const auto& v : violations)
        std::cout << "violation: " << v << "\n";
    std::cout << suite << ": " << violations.size() << " violation(s) up to n="
              << max_n << "\n";
    return violations.empty() ? 0 : 1;
}

LieFamily parse_family(const std::string& tag) {
    static const std::map<std::string, LieFamily> table = {
        {"A", LieFamily::A},        {"2A", LieFamily::TwistedA},
        {"B", LieFamily::B},        {"C", LieFamily::C},
        {"D", LieFamily::D},        {"2D", LieFamily::TwistedD},
        {"G2", LieFamily::G2},      {"3D4", LieFamily::TwistedD4},
        {"F4", LieFamily::F4},      {"E6", LieFamily::E6},
        {"2E6", LieFamily::TwistedE6}, {"E7", LieFamily::E7},
        {"E8", LieFamily::E8},      {"2B2", LieFamily::SuzukiB2},
        {"2G2", LieFamily::ReeG2},  {"2F4", LieFamily::ReeF4},
        {"L2", LieFamily::L2},
    };
    auto it = table.find(tag);
    if (it == table.end())
        throw CLI::ValidationError("family", "unknown family tag '" + tag + "'");
    return it->second;
}

void print_sandwich_line(const SandwichResult& entry, bool machine) {
    if (entry.skipped) {
        if (machine)
            std::cout << "spec=" << entry.name << " skipped reason=\""
                      << entry.skip_reason << "\"\n";
        else
            std::cout << entry.name << ": skipped (" << entry.skip_reason << ")\n";
        return;
    }
    if (machine)
        std::cout << "spec=" << entry.name << " chi1=" << entry.chi1
                  << " steinberg=" << entry.steinberg
                  << " sandwich=" << (entry.ok ? "ok" : "FAIL") << "\n";
    else
        std::cout << entry.name << ": chi1=" << entry.chi1
                  << " steinberg=" << entry.steinberg << " sandwich "
                  << (entry.ok ? "ok" : "FAIL") << "\n";
}

int run_lie(const std::string& family_tag, unsigned rank, const std::string& q_text,
            unsigned m, bool grid, const std::string& range_tag,
            const GlobalOptions& opts) {
    if (grid) {
        bool all_ok = true;
        for (const auto& entry : sandwich_grid()) {
            print_sandwich_line(entry, opts.machine());
            if (!entry.skipped && !entry.ok)
                all_ok = false;
        }
        return all_ok ? 0 : 1;
    }
    const LieFamily family = parse_family(family_tag);
    if (family == LieFamily::L2) {
        if (q_text.empty())
            throw CLI::ValidationError("--q", "L2 needs a field size");
        const BigInt q(q_text);
        const LieFamilySpec spec = LieFamilySpec::linear_rank_one(q);
        if (auto reason = excluded_isomorphism(spec)) {
            std::cout << spec.name() << ": excluded (" << *reason << ")\n";
            return 1;
        }
        std::cout << spec.name() << ": steinberg=" << steinberg_degree(spec) << "\n";
        if (q >= 7) {
            static const std::map<std::string, L2Range> ranges = {
                {"within-pgl", L2Range::WithinPgl},
                {"within-pgammal", L2Range::WithinPgammal},
                {"above-pgl", L2Range::AbovePgl},
                {"generic", L2Range::Generic},
            };
            auto it = ranges.find(range_tag);
            if (it == ranges.end())
                throw CLI::ValidationError("--range", "unknown range tag");
            std::cout << "guaranteed degrees (" << range_tag << "):";
            for (const BigInt& d : l2_guaranteed_degrees(q, it->second))
                std::cout << " " << d;
            std::cout << "\n";
        }
        return 0;
    }

    LieFamilySpec spec = [&] {
        switch (family) {
        case LieFamily::SuzukiB2:
        case LieFamily::ReeG2:
        case LieFamily::ReeF4:
            return LieFamilySpec::suzuki_ree(family, m);
        case LieFamily::A:
        case LieFamily::TwistedA:
        case LieFamily::B:
        case LieFamily::C:
        case LieFamily::D:
        case LieFamily::TwistedD:
            if (q_text.empty())
                throw CLI::ValidationError("--q", "classical families need a field size");
            return LieFamilySpec::classical(family, rank, BigInt(q_text));
        default:
            if (q_text.empty())
                throw CLI::ValidationError("--q", "exceptional families need a field size");
            return LieFamilySpec::exceptional(family, BigInt(q_text));
        }
    }();
    if (auto reason = excluded_isomorphism(spec)) {
        std::cout << spec.name() << ": excluded (" << *reason << ")\n";
        return 1;
    }
    SandwichResult entry;
    entry.name = spec.name();
    entry.chi1 = subunipotent_degree(spec);
    entry.steinberg = steinberg_degree(spec);
    entry.ok = entry.chi1 > 1 && entry.chi1 < entry.steinberg;
    print_sandwich_line(entry, opts.machine());
    return entry.ok ? 0 : 1;
}

int run_sporadic(const std::string& action, const std::string& name, long long from,
                 long long to, const GlobalOptions& opts) {
    if (action == "validate") {
        const auto report = validate_sporadic_table();
        for (const auto& p : report.problems)
            std::cout << "problem: " << p << "\n";
        std::cout << (report.ok ? "table ok: 40 rows" : "table INVALID") << "\n";
        return report.ok ? 0 : 1;
    }
    if (action == "dump") {
        for (const auto& row : sporadic_table())
            std::cout << row.name << " p=" << row.largest_prime << " d1=" << row.d1
                      << " d2=" << row.d2 << " d3=" << row.d3
                      << " outer2=" << (row.has_outer_2 ? "yes" : "no") << "\n";
        return 0;
    }
    if (action == "replay") {
        const auto report = replay_elimination(name, from, to);
        auto print_chain = [&](const char* label, const ChainSummary& chain) {
            std::cout << label << ": "
                      << (chain.all_eliminated ? "eliminated everywhere"
                                               : "SURVIVORS PRESENT")
                      << "\n";
            for (const auto& [predicate, count] : chain.predicate_counts)
                std::cout << "  " << predicate << ": " << count << " n\n";
            for (long long n : chain.survivors)
                std::cout << "  survivor n=" << n << "\n";
            if (!opts.machine() && to - from < 20)
                for (const auto& step : chain.steps)
                    std::cout << "  n=" << step.n << ": " << step.predicate << " ("
                              << step.detail << ")\n";
        };
        std::cout << report.group << " over [" << from << ", " << to << "]\n";
        print_chain("almost-simple socle", report.almost_simple);
        print_chain("wreath-square socle", report.wreath_square);
        return report.all_eliminated() ? 0 : 1;
    }
    std::cerr << "unknown sporadic action '" << action << "'\n";
    return 2;
}

int run_probe(unsigned n) {
    const auto probe = probe_remark_conjecture(n);
    std::cout << "n=" << probe.n << " witness=" << probe.witness.to_string()
              << " chi=" << probe.chi << " half=" << probe.half << "\n";
    std::cout << "half in cd(A_n) \\ cd(S_n): "
              << (probe.half_in_alt_only() ? "yes" : "no") << " (in alt: "
              << (probe.half_in_alt ? "yes" : "no") << ", in sym: "
              << (probe.half_in_sym ? "yes" : "no") << ")\n";
    std::cout << "chi in cd(S_n) \\ cd(A_n): "
              << (probe.full_in_sym_only() ? "yes" : "no") << " (in sym: "
              << (probe.full_in_sym ? "yes" : "no") << ", in alt: "
              << (probe.full_in_alt ? "yes" : "no") << ")\n";
    std::cout << "note: a conjecture probe, findings only\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact character-degree patterns of symmetric groups"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--cap", opts.cap, "enumeration cap override");
    app.add_flag("--i-know", opts.i_know, "acknowledge a large enumeration");

    unsigned pattern_n = 0;
    std::string group = "sym";
    std::string output;
    auto* pattern_cmd = app.add_subcommand("pattern", "emit a degree pattern file");
    pattern_cmd->add_option("n", pattern_n, "symmetric group degree")->required();
    pattern_cmd->add_option("--group", group, "sym or alt")
        ->check(CLI::IsMember({"sym", "alt"}));
    pattern_cmd->add_option("-o,--output", output, "output path (default stdout)");

    std::string recognize_path;
    bool diagnostics = false;
    auto* recognize_cmd =
        app.add_subcommand("recognize", "decide whether a pattern file is some X1(S_n)");
    recognize_cmd->add_option("file", recognize_path, "pattern file")->required();
    recognize_cmd->add_flag("--diagnostics", diagnostics, "print replay diagnostics");

    unsigned rasala_n = 0;
    auto* rasala_cmd =
        app.add_subcommand("rasala", "minimal nontrivial degrees d_1..d_11 of S_n");
    rasala_cmd->add_option("n", rasala_n, "symmetric group degree")->required();

    std::string suite;
    unsigned max_n = 40;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification sweep");
    verify_cmd->add_option("suite", suite, "lemma2.1 | lemma2.3 | lemma2.6 | identity-k")
        ->required();
    verify_cmd->add_option("--max-n", max_n, "sweep upper bound (default 40)");

    std::string family_tag;
    unsigned lie_rank = 0;
    std::string lie_q;
    unsigned lie_m = 1;
    bool lie_grid = false;
    std::string l2_range = "generic";
    auto* lie_cmd = app.add_subcommand("lie", "unipotent and Steinberg degrees");
    lie_cmd->add_option("family", family_tag,
                        "A 2A B C D 2D G2 3D4 F4 E6 2E6 E7 E8 2B2 2G2 2F4 L2");
    lie_cmd->add_option("--n", lie_rank, "rank / dimension parameter");
    lie_cmd->add_option("--q", lie_q, "field size");
    lie_cmd->add_option("--m", lie_m, "twist exponent (field size p^(2m+1))");
    lie_cmd->add_flag("--grid", lie_grid, "sweep the whole parameter grid");
    lie_cmd->add_option("--range", l2_range,
                        "L2 automorphism range: within-pgl | within-pgammal | "
                        "above-pgl | generic");

    std::string sporadic_action;
    std::string sporadic_name;
    long long replay_from = 32, replay_to = 32;
    auto* sporadic_cmd = app.add_subcommand("sporadic", "embedded degree table");
    sporadic_cmd->add_option("action", sporadic_action, "validate | dump | replay")
        ->required();
    sporadic_cmd->add_option("name", sporadic_name, "group name for replay");
    sporadic_cmd->add_option("--from", replay_from, "replay range start (>= 32)");
    sporadic_cmd->add_option("--to", replay_to, "replay range end");

    unsigned probe_n = 0;
    auto* probe_cmd =
        app.add_subcommand("probe-remark", "half-degree membership probe at the "
                                           "canonical self-conjugate witness");
    probe_cmd->add_option("n", probe_n, "symmetric group degree")->required();

    try {
        app.parse(argc, argv);
        apply_cap(opts);
        if (*pattern_cmd)
            return run_pattern(pattern_n, group, output, opts);
        if (*recognize_cmd)
            return run_recognize(recognize_path, diagnostics, opts);
        if (*rasala_cmd)
            return run_rasala(rasala_n, opts);
        if (*verify_cmd)
            return run_verify(suite, max_n);
        if (*lie_cmd) {
            if (!lie_grid && family_tag.empty())
                throw CLI::ValidationError("family",
                                           "give a family tag or use --grid");
            return run_lie(family_tag, lie_rank, lie_q, lie_m, lie_grid, l2_range,
                           opts);
        }
        if (*sporadic_cmd)
            return run_sporadic(sporadic_action, sporadic_name, replay_from,
                                replay_to, opts);
        if (*probe_cmd)
            return run_probe(probe_n);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

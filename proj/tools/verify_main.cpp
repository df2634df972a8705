#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qrice/report_json.hpp"
#include "qrice/verifier.hpp"

namespace {

using qrice::CheckResult;
using qrice::Report;

/// Human-readable digest on stderr: one line per suite label plus an overall
/// verdict. The NDJSON report on the chosen sink stays machine-clean.
void print_summary(std::ostream& os, const Report& report, bool verbose) {
    if (verbose) {
        for (const CheckResult& c : report.checks) {
            os << c.suite;
            for (const auto& [name, value] : c.params) os << ' ' << name << '=' << value;
            os << ": " << (c.equal ? "ok" : "FAIL");
            if (!c.note.empty()) os << " (" << c.note << ")";
            os << " [" << c.elapsed_us << " us]\n";
        }
    }
    // group consecutive checks by suite label
    std::size_t i = 0;
    while (i < report.checks.size()) {
        const std::string& label = report.checks[i].suite;
        std::size_t count = 0, pass = 0;
        long long elapsed = 0;
        for (; i < report.checks.size() && report.checks[i].suite == label; ++i) {
            ++count;
            pass += report.checks[i].equal ? 1 : 0;
            elapsed += report.checks[i].elapsed_us;
        }
        os << label << ": " << pass << "/" << count << " ok (" << elapsed / 1000
           << " ms)\n";
    }
    os << "overall: " << (report.overall() ? "PASS" : "FAIL") << " ("
       << report.pass_count() << "/" << report.checks.size() << " checks)\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "verify — exact and series-mode checks of two classical q-series "
        "identities and every step of their residue-calculus derivations"};
    app.require_subcommand(1);

    qrice::SampleConfig config;
    std::string mode_str = "both";
    std::string output_path;
    bool quiet = false;
    bool verbose = false;

    app.add_option("--n-max", config.n_max, "Largest n in the check grids")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--m-max", config.m_max,
                   "Largest m (Eq. (1) multiplicity / [w^m] index)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--trunc", config.q_order,
                   "Series truncation order Q; series are kept mod q^(Q+1)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--trials", config.trials, "Sampled evaluation points per grid cell")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", config.seed, "Seed for deterministic point sampling")
        ->capture_default_str();
    app.add_option("--denominator-bound", config.denominator_bound,
                   "Largest denominator of sampled rationals")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--mode", mode_str, "Evaluation mode: exact, series, or both")
        ->check(CLI::IsMember({"exact", "series", "both"}))
        ->capture_default_str();
    app.add_option("--output", output_path,
                   "Write the NDJSON report to this file instead of stdout");
    app.add_flag("--quiet", quiet, "Suppress the human-readable summary on stderr");
    app.add_flag("--verbose", verbose, "Per-check lines on stderr");

    const std::map<std::string, std::vector<qrice::Suite>> commands = {
        {"identity1", {qrice::Suite::identity1}},
        {"identity2", {qrice::Suite::identity2}},
        {"dilcher", {qrice::Suite::dilcher}},
        {"lemmas", {qrice::Suite::product_lemma, qrice::Suite::telescoping}},
        {"cauchy", {qrice::Suite::cauchy}},
        {"qrice", {qrice::Suite::qrice_consistency}},
        {"all", {qrice::Suite::all}},
    };
    const std::map<std::string, std::string> descriptions = {
        {"identity1", "Check Eq. (1): LHS = RHS over the (n, m) grid"},
        {"identity2", "Check Eq. (2): LHS = RHS over n = 0..n-max"},
        {"dilcher", "Cross-check the [w^m] coefficient against the nested sum"},
        {"lemmas", "Check the product-expansion and telescoping lemmas"},
        {"cauchy", "Check Cauchy's q-binomial formula mod q^(Q+1)"},
        {"qrice", "Check the alternating-sum machinery against both identities"},
        {"all", "Run every suite"},
    };
    for (const auto& [name, suites] : commands) {
        (void)suites;
        CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
        sub->fallthrough(); // shared options live on the parent
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // prints help, exit 0
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the usage message
        return 2;
    }

    config.mode = *qrice::mode_from_name(mode_str); // membership already checked
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        Report merged;
        merged.config = config;
        merged.suite = command;
        for (qrice::Suite suite : commands.at(command)) {
            Report part = qrice::run_suite(suite, config);
            merged.checks.insert(merged.checks.end(),
                                 std::make_move_iterator(part.checks.begin()),
                                 std::make_move_iterator(part.checks.end()));
        }
        if (merged.checks.empty() && !quiet)
            std::cerr << "note: no checks in command '" << command << "' apply to mode '"
                      << mode_str << "'\n";

        std::ofstream file;
        std::ostream* sink = &std::cout;
        if (!output_path.empty()) {
            file.open(output_path);
            if (!file) {
                std::cerr << "error: cannot open output file: " << output_path << '\n';
                return 3;
            }
            sink = &file;
        }
        qrice::write_report(*sink, merged);
        sink->flush();
        if (!quiet) print_summary(std::cerr, merged, verbose);
        return merged.overall() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qrice/identities.hpp"
#include "qrice/qpoint.hpp"
#include "qrice/sampling.hpp"

namespace qrice {

enum class Suite {
    identity1,
    identity2,
    dilcher,
    product_lemma,
    telescoping,
    cauchy,
    qrice_consistency,
    all,
};

const char* suite_name(Suite which);
std::optional<Suite> suite_from_name(std::string_view name);

/// Outcome of one check: a single grid cell evaluated at a single point (or
/// pinned value). The value fields hold pre-rendered JSON fragments so report
/// lines can embed them verbatim; with Mode::both, lhs/rhs are objects
/// carrying the exact and series values side by side.
struct CheckResult {
    std::string suite;                                 // may carry a sub-label after '/'
    std::vector<std::pair<std::string, long>> params;  // ordered (name, value)
    std::string point_json;  // JSON object with the sampled/pinned inputs
    std::string lhs_json;    // JSON value
    std::string rhs_json;    // JSON value
    std::string extra_json;  // JSON object with auxiliary values; may be empty
    bool equal = false;
    std::string note;        // diagnostic text when a check fails or errors
    std::int64_t elapsed_us = 0;
};

struct Report {
    SampleConfig config;
    std::string suite;  // the requested selector, e.g. "identity2" or "all"
    std::vector<CheckResult> checks;

    std::size_t pass_count() const;
    std::size_t fail_count() const;
    bool overall() const { return fail_count() == 0; }
};

/// Test seam for mutation sanity checks: a harness can replace an evaluator
/// with a corrupted one and assert that the suite reports failures.
/// Production runs pass no overrides.
struct SuiteOverrides {
    std::function<Rational(int n, int m, const QPoint& pt)> identity1_lhs_exact;
    std::function<Rational(int n, const QPoint& pt)> identity2_lhs_exact;
};

/// Runs the selected suite over its (n, m) grid x trials, one CheckResult per
/// cell x trial, ordered by (cell, trial) regardless of parallelism. Check
/// errors (pole hits, truncation overflow) are recorded as failures with
/// diagnostic text and never abort the run.
Report run_suite(Suite which, const SampleConfig& config,
                 const SuiteOverrides* overrides = nullptr);

} // namespace qrice

#include "qrice/verifier.hpp"

#include <gtest/gtest.h>

#include <string>

#include <json.hpp>

#include "qrice/report_json.hpp"

using qrice::CheckResult;
using qrice::Mode;
using qrice::QPoint;
using qrice::Rational;
using qrice::Report;
using qrice::SampleConfig;
using qrice::Suite;
using qrice::SuiteOverrides;

namespace {

SampleConfig small_config() {
    SampleConfig cfg;
    cfg.n_max = 3;
    cfg.m_max = 2;
    cfg.trials = 2;
    cfg.q_order = 10;
    return cfg;
}

} // namespace

TEST(RunSuite, SmallestGridIsExactlyOneCheck) {
    SampleConfig cfg;
    cfg.n_max = 1;
    cfg.m_max = 1;
    cfg.trials = 1;
    const Report report = run_suite(Suite::identity1, cfg);
    ASSERT_EQ(report.checks.size(), 1u);
    EXPECT_TRUE(report.checks[0].equal);
    EXPECT_TRUE(report.overall());
    EXPECT_EQ(report.checks[0].suite, "identity1");
}

TEST(RunSuite, Identity2DefaultGridHas45Checks) {
    SampleConfig cfg; // defaults: n_max = 8, trials = 5 -> (8+1)*5
    const Report report = run_suite(Suite::identity2, cfg);
    EXPECT_EQ(report.checks.size(), 45u);
    EXPECT_EQ(report.fail_count(), 0u);
    EXPECT_TRUE(report.overall());
}

TEST(RunSuite, GridCountsFollowConfig) {
    const SampleConfig cfg = small_config();
    EXPECT_EQ(run_suite(Suite::identity1, cfg).checks.size(),
              std::size_t(3 * 2 * 2)); // n_max * m_max * trials
    EXPECT_EQ(run_suite(Suite::identity2, cfg).checks.size(),
              std::size_t(4 * 2)); // (n_max+1) * trials
    EXPECT_EQ(run_suite(Suite::product_lemma, cfg).checks.size(),
              std::size_t(3 + 2)); // pinned x values + trials
    EXPECT_EQ(run_suite(Suite::cauchy, cfg).checks.size(),
              std::size_t(2 + 2)); // pinned collapses + trials
}

TEST(RunSuite, AllConcatenatesSuitesInFixedOrder) {
    const SampleConfig cfg = small_config();
    const Report all = run_suite(Suite::all, cfg);
    EXPECT_EQ(all.suite, "all");
    std::size_t sum = 0;
    for (Suite s : {Suite::identity1, Suite::identity2, Suite::dilcher,
                    Suite::product_lemma, Suite::telescoping, Suite::cauchy,
                    Suite::qrice_consistency})
        sum += run_suite(s, cfg).checks.size();
    ASSERT_EQ(all.checks.size(), sum);
    EXPECT_EQ(all.checks.front().suite, "identity1");
    EXPECT_EQ(all.checks.back().suite.substr(0, 17), "qrice_consistency");
    EXPECT_TRUE(all.overall());
}

TEST(RunSuite, ModeGatesSuiteContent) {
    SampleConfig cfg = small_config();
    // exact-arithmetic suites are empty in series mode, and vice versa
    cfg.mode = Mode::series;
    EXPECT_TRUE(run_suite(Suite::dilcher, cfg).checks.empty());
    EXPECT_TRUE(run_suite(Suite::telescoping, cfg).checks.empty());
    EXPECT_TRUE(run_suite(Suite::qrice_consistency, cfg).checks.empty());
    EXPECT_FALSE(run_suite(Suite::product_lemma, cfg).checks.empty());
    cfg.mode = Mode::exact;
    EXPECT_TRUE(run_suite(Suite::product_lemma, cfg).checks.empty());
    EXPECT_TRUE(run_suite(Suite::cauchy, cfg).checks.empty());
    EXPECT_FALSE(run_suite(Suite::dilcher, cfg).checks.empty());
}

TEST(RunSuite, BothModeRecordsExactAndSeriesSideBySide) {
    SampleConfig cfg;
    cfg.n_max = 1;
    cfg.m_max = 1;
    cfg.trials = 1;
    cfg.q_order = 6;
    const Report report = run_suite(Suite::identity1, cfg);
    ASSERT_EQ(report.checks.size(), 1u);
    const auto lhs = nlohmann::json::parse(report.checks[0].lhs_json);
    ASSERT_TRUE(lhs.is_object());
    EXPECT_TRUE(lhs.contains("exact"));
    EXPECT_TRUE(lhs.contains("series"));
    EXPECT_EQ(lhs["series"].size(), 7u); // Q+1 coefficients
    const auto extra = nlohmann::json::parse(report.checks[0].extra_json);
    EXPECT_TRUE(extra.contains("w_extraction"));
    // exact-only runs store the bare rational instead
    cfg.mode = Mode::exact;
    const Report exact_run = run_suite(Suite::identity1, cfg);
    const auto bare = nlohmann::json::parse(exact_run.checks[0].lhs_json);
    EXPECT_TRUE(bare.is_string());
}

TEST(RunSuite, DeterministicForFixedSeed) {
    const SampleConfig cfg = small_config();
    const std::string a = report_to_string(run_suite(Suite::all, cfg));
    const std::string b = report_to_string(run_suite(Suite::all, cfg));
    EXPECT_TRUE(qrice::reports_equal_ignoring_elapsed(a, b));
    SampleConfig other = cfg;
    other.seed = 43;
    const std::string c = report_to_string(run_suite(Suite::all, other));
    EXPECT_FALSE(qrice::reports_equal_ignoring_elapsed(a, c));
}

TEST(RunSuite, ThreadCountNeverChangesResults) {
    SampleConfig cfg = small_config();
    cfg.threads = 1;
    const std::string serial = report_to_string(run_suite(Suite::all, cfg));
    cfg.threads = 4;
    const std::string parallel = report_to_string(run_suite(Suite::all, cfg));
    EXPECT_TRUE(qrice::reports_equal_ignoring_elapsed(serial, parallel));
}

TEST(RunSuite, MutatedEvaluatorIsCaught) {
    SampleConfig cfg = small_config();
    cfg.mode = Mode::exact;
    SuiteOverrides broken;
    broken.identity1_lhs_exact = [](int n, int m, const QPoint& pt) {
        return std::get<Rational>(identity1_side(qrice::Side::lhs, n, m, pt,
                                                 qrice::EvalMode::exact())) +
               Rational(1);
    };
    const Report report = run_suite(Suite::identity1, cfg, &broken);
    EXPECT_EQ(report.fail_count(), report.checks.size());
    EXPECT_FALSE(report.overall());
    for (const CheckResult& check : report.checks)
        EXPECT_NE(check.note.find("exact sides differ"), std::string::npos);
}

TEST(RunSuite, Identity2MutationAlsoCaught) {
    SampleConfig cfg = small_config();
    cfg.mode = Mode::exact;
    SuiteOverrides broken;
    broken.identity2_lhs_exact = [](int n, const QPoint& pt) {
        return -std::get<Rational>(identity2_side(qrice::Side::lhs, n, pt,
                                                  qrice::EvalMode::exact()));
    };
    const Report report = run_suite(Suite::identity2, cfg, &broken);
    EXPECT_GT(report.fail_count(), 0u);
}

TEST(RunSuite, ThrowingCheckBecomesRecordedFailure) {
    SampleConfig cfg = small_config();
    cfg.mode = Mode::exact;
    SuiteOverrides broken;
    broken.identity1_lhs_exact = [](int, int, const QPoint&) -> Rational {
        throw qrice::Error("synthetic failure");
    };
    const Report report = run_suite(Suite::identity1, cfg, &broken);
    ASSERT_FALSE(report.checks.empty()); // the run itself survives
    for (const CheckResult& check : report.checks) {
        EXPECT_FALSE(check.equal);
        EXPECT_NE(check.note.find("error: synthetic failure"), std::string::npos);
    }
}

TEST(SuiteNames, RoundTrip) {
    for (Suite s : {Suite::identity1, Suite::identity2, Suite::dilcher,
                    Suite::product_lemma, Suite::telescoping, Suite::cauchy,
                    Suite::qrice_consistency, Suite::all}) {
        const auto back = qrice::suite_from_name(qrice::suite_name(s));
        ASSERT_TRUE(back.has_value());
        EXPECT_EQ(*back, s);
    }
    EXPECT_FALSE(qrice::suite_from_name("identity3").has_value());
}

TEST(ReportJson, LinesParseAndCarryTheSchema) {
    SampleConfig cfg;
    cfg.n_max = 2;
    cfg.m_max = 1;
    cfg.trials = 1;
    cfg.q_order = 5;
    const Report report = run_suite(Suite::identity2, cfg);
    for (const CheckResult& check : report.checks) {
        const auto line = nlohmann::json::parse(qrice::check_json_line(check));
        EXPECT_EQ(line["suite"], "identity2");
        EXPECT_TRUE(line["params"].contains("n"));
        EXPECT_TRUE(line["point"].contains("q"));
        EXPECT_TRUE(line["point"].contains("t"));
        EXPECT_TRUE(line["equal"].is_boolean());
        EXPECT_TRUE(line.contains("elapsed_us"));
    }
    const auto summary = nlohmann::json::parse(qrice::summary_json_line(report));
    EXPECT_TRUE(summary["summary"].get<bool>());
    EXPECT_EQ(summary["checks"].get<std::size_t>(), report.checks.size());
    EXPECT_EQ(summary["config"]["seed"].get<std::uint64_t>(), cfg.seed);
    EXPECT_TRUE(summary["overall"].get<bool>());
    // full report: one line per check plus the summary line
    const std::string rendered = qrice::report_to_string(report);
    std::size_t lines = 0;
    for (char ch : rendered) lines += ch == '\n' ? 1 : 0;
    EXPECT_EQ(lines, report.checks.size() + 1);
}

TEST(ReportJson, ComparisonIgnoresElapsedOnly) {
    SampleConfig cfg;
    cfg.n_max = 1;
    cfg.m_max = 1;
    cfg.trials = 1;
    Report report = run_suite(Suite::identity1, cfg);
    const std::string original = qrice::report_to_string(report);
    report.checks[0].elapsed_us += 12345;
    EXPECT_TRUE(qrice::reports_equal_ignoring_elapsed(original,
                                                      qrice::report_to_string(report)));
    report.checks[0].equal = false;
    EXPECT_FALSE(qrice::reports_equal_ignoring_elapsed(original,
                                                       qrice::report_to_string(report)));
}

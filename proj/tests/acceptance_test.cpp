// Acceptance checks for the verification harness. Each test covers one
// criterion end to end at its stated scale and prints exactly one
// "[acceptance] criterion N (...): PASS|FAIL" line.

#include <gtest/gtest.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <sys/wait.h>

#include "qrice/report_json.hpp"
#include "qrice/verifier.hpp"

#ifndef VERIFY_BIN
#error "VERIFY_BIN must be defined"
#endif

using qrice::EvalMode;
using qrice::QPoint;
using qrice::Rational;
using qrice::Report;
using qrice::SampleConfig;
using qrice::Side;
using qrice::Suite;

namespace {

void criterion(int number, const char* description, const std::function<void()>& body) {
    try {
        body();
    } catch (const std::exception& e) {
        ADD_FAILURE() << "unexpected exception: " << e.what();
    }
    std::cout << "[acceptance] criterion " << number << " (" << description
              << "): " << (::testing::Test::HasFailure() ? "FAIL" : "PASS")
              << std::endl;
}

double run_timed(Suite suite, const SampleConfig& cfg, Report& out) {
    const auto start = std::chrono::steady_clock::now();
    out = run_suite(suite, cfg);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

void expect_all_pass(const Report& report) {
    EXPECT_EQ(report.fail_count(), 0u);
    for (const auto& check : report.checks)
        if (!check.equal)
            ADD_FAILURE() << check.suite << " failed: " << check.note;
}

} // namespace

TEST(Acceptance, Criterion1Identity1Grid) {
    criterion(1, "Eq. (1): n<=8, m<=4, 5 points, exact equality, <60s", [] {
        SampleConfig cfg; // defaults are exactly the stated grid, seed 42
        Report report;
        const double seconds = run_timed(Suite::identity1, cfg, report);
        EXPECT_EQ(report.checks.size(), std::size_t(8 * 4 * 5));
        expect_all_pass(report);
        EXPECT_LT(seconds, 60.0);
    });
}

TEST(Acceptance, Criterion2Identity2Grid) {
    criterion(2, "Eq. (2): n=0..8, 5 points, exact equality, <10s", [] {
        SampleConfig cfg;
        Report report;
        const double seconds = run_timed(Suite::identity2, cfg, report);
        EXPECT_EQ(report.checks.size(), std::size_t(9 * 5));
        expect_all_pass(report);
        EXPECT_LT(seconds, 10.0);
    });
}

TEST(Acceptance, Criterion3DilcherCrossMethod) {
    criterion(3, "Dilcher coefficient: w-extraction vs nested sum, n<=8, m<=5", [] {
        SampleConfig cfg;
        cfg.m_max = 5;
        cfg.trials = 3;
        Report report;
        run_timed(Suite::dilcher, cfg, report);
        EXPECT_EQ(report.checks.size(), std::size_t(8 * 5 * 3));
        expect_all_pass(report);
    });
}

TEST(Acceptance, Criterion4ProductExpansionLemma) {
    criterion(4, "product-expansion lemma: W=4, Q=30, pinned x, [w^2] double sums", [] {
        SampleConfig cfg; // Q defaults to 30
        Report report;
        run_timed(Suite::product_lemma, cfg, report);
        // three pinned x values (1, 1/2, -2/3) come before the sampled ones
        ASSERT_GE(report.checks.size(), 3u);
        int pinned = 0;
        for (const auto& check : report.checks)
            for (const auto& [name, value] : check.params)
                if (name == "pinned") ++pinned;
        EXPECT_EQ(pinned, 3);
        for (const auto& check : report.checks) {
            // every cell also re-derives [w^2] in both displayed forms
            EXPECT_NE(check.extra_json.find("w2_h_form"), std::string::npos);
            EXPECT_NE(check.extra_json.find("w2_k_form"), std::string::npos);
        }
        expect_all_pass(report);
    });
}

TEST(Acceptance, Criterion5CauchyFormula) {
    criterion(5, "Cauchy's formula mod q^31: 5 sampled (z,x) pairs + z=1, z=0", [] {
        SampleConfig cfg;
        Report report;
        run_timed(Suite::cauchy, cfg, report);
        EXPECT_EQ(report.checks.size(), std::size_t(2 + 5));
        expect_all_pass(report);
    });
}

TEST(Acceptance, Criterion6QRiceConsistency) {
    criterion(6, "q-Rice sums reproduce both LHS term-by-term, f=1 collapses, n<=8", [] {
        SampleConfig cfg;
        Report report;
        run_timed(Suite::qrice_consistency, cfg, report);
        bool saw_f_one = false, saw_id1 = false, saw_id2 = false;
        for (const auto& check : report.checks) {
            saw_f_one = saw_f_one || check.suite == "qrice_consistency/f_one";
            saw_id1 = saw_id1 || check.suite == "qrice_consistency/identity1_terms";
            saw_id2 = saw_id2 || check.suite == "qrice_consistency/identity2_terms";
        }
        EXPECT_TRUE(saw_f_one);
        EXPECT_TRUE(saw_id1);
        EXPECT_TRUE(saw_id2);
        expect_all_pass(report);
    });
}

TEST(Acceptance, Criterion7CrossModeWExtraction) {
    criterion(7, "[w^m] residue rewrite equals series-mode Eq. (1) LHS mod q^26", [] {
        const int q_order = 25;
        for (int n = 1; n <= 5; ++n)
            for (int m = 1; m <= 3; ++m)
                for (const Rational& x : {Rational(1), Rational(1, 2)}) {
                    QPoint pt;
                    pt.q = Rational(1, 2); // series mode ignores the value of q
                    pt.x = x;
                    pt.horizon = n;
                    const auto series = std::get<qrice::QSeries>(identity1_side(
                        Side::lhs, n, m, pt, EvalMode::q_series(q_order)));
                    EXPECT_EQ(identity1_w_extraction(n, m, x, q_order), series)
                        << "n=" << n << " m=" << m << " x=" << x;
                }
    });
}

TEST(Acceptance, Criterion8MutationIsDetected) {
    criterion(8, "a sign flip in an evaluator produces suite failures", [] {
        SampleConfig cfg;
        cfg.n_max = 3;
        cfg.m_max = 2;
        cfg.trials = 2;
        cfg.mode = qrice::Mode::exact;
        qrice::SuiteOverrides flipped;
        flipped.identity1_lhs_exact = [](int n, int m, const QPoint& pt) {
            return -std::get<Rational>(
                identity1_side(Side::lhs, n, m, pt, EvalMode::exact()));
        };
        const Report r1 = run_suite(Suite::identity1, cfg, &flipped);
        EXPECT_GT(r1.fail_count(), 0u);
        qrice::SuiteOverrides flipped2;
        flipped2.identity2_lhs_exact = [](int n, const QPoint& pt) {
            return -std::get<Rational>(
                identity2_side(Side::lhs, n, pt, EvalMode::exact()));
        };
        const Report r2 = run_suite(Suite::identity2, cfg, &flipped2);
        EXPECT_GT(r2.fail_count(), 0u);
    });
}

TEST(Acceptance, Criterion9Determinism) {
    criterion(9, "two `verify all --seed 42` runs agree modulo timing", [] {
        auto run_to = [](const std::string& path) {
            const std::string cmd = std::string(VERIFY_BIN) +
                                    " all --seed 42 --quiet --output " + path;
            const int status = std::system(cmd.c_str());
            return (status != -1 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
        };
        auto slurp = [](const std::string& path) {
            std::ifstream in(path);
            return std::string((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
        };
        const std::string path1 = "acceptance_run1.ndjson";
        const std::string path2 = "acceptance_run2.ndjson";
        EXPECT_EQ(run_to(path1), 0);
        EXPECT_EQ(run_to(path2), 0);
        const std::string a = slurp(path1);
        const std::string b = slurp(path2);
        EXPECT_FALSE(a.empty());
        EXPECT_TRUE(qrice::reports_equal_ignoring_elapsed(a, b));
        std::remove(path1.c_str());
        std::remove(path2.c_str());
    });
}

#include "qrice/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include <json.hpp>

namespace qrice {

namespace {

using ordered_json = nlohmann::ordered_json;

// ---- JSON rendering of values ---------------------------------------------

ordered_json j_rat(const Rational& r) { return ordered_json(r.to_string()); }

ordered_json j_qseries(const QSeries& s) {
    ordered_json arr = ordered_json::array();
    for (int k = 0; k <= s.order(); ++k) arr.push_back(s.coeff(k).to_string());
    return arr;
}

ordered_json j_wpoly(const WPoly& p) {
    ordered_json arr = ordered_json::array();
    for (int k = 0; k <= p.order(); ++k) arr.push_back(j_qseries(p.coeff(k)));
    return arr;
}

// ---- task list + deterministic parallel executor ---------------------------

struct Task {
    std::string suite;
    std::vector<std::pair<std::string, long>> params;
    std::function<void(CheckResult&)> body;
};

std::vector<CheckResult> execute(std::vector<Task>&& tasks, int threads) {
    std::vector<CheckResult> results(tasks.size());
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        results[i].suite = tasks[i].suite;
        results[i].params = tasks[i].params;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    std::size_t pool = threads > 0 ? static_cast<std::size_t>(threads)
                                   : std::clamp<std::size_t>(hw, 1, 8);
    pool = std::min(pool, std::max<std::size_t>(tasks.size(), 1));
    // Each worker claims the next unclaimed index and writes only that slot,
    // so the output is in task order no matter how execution interleaves.
    std::atomic<std::size_t> cursor{0};
    auto worker = [&tasks, &results, &cursor]() {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= tasks.size()) return;
            CheckResult& out = results[i];
            const auto start = std::chrono::steady_clock::now();
            try {
                tasks[i].body(out);
            } catch (const std::exception& e) {
                out.equal = false;
                out.note = std::string("error: ") + e.what();
            }
            out.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
        }
    };
    if (pool <= 1) {
        worker();
    } else {
        std::vector<std::thread> workers;
        workers.reserve(pool);
        for (std::size_t i = 0; i < pool; ++i) workers.emplace_back(worker);
        for (auto& w : workers) w.join();
    }
    return results;
}

bool wants_exact(Mode mode) { return mode != Mode::series; }
bool wants_series(Mode mode) { return mode != Mode::exact; }

void append_reason(std::string& reasons, const std::string& what) {
    if (!reasons.empty()) reasons += "; ";
    reasons += what;
}

// ---- per-suite task builders -----------------------------------------------

void build_identity1(std::vector<Task>& tasks, const SampleConfig& cfg,
                     const std::vector<QPoint>& pts, const SuiteOverrides* overrides) {
    for (int n = 1; n <= cfg.n_max; ++n)
        for (int m = 1; m <= cfg.m_max; ++m)
            for (int trial = 0; trial < cfg.trials; ++trial) {
                Task task;
                task.suite = "identity1";
                task.params = {{"n", n}, {"m", m}, {"trial", trial}};
                if (wants_series(cfg.mode)) task.params.push_back({"Q", cfg.q_order});
                const QPoint pt = pts[static_cast<std::size_t>(trial)];
                const Mode mode = cfg.mode;
                const int q_order = cfg.q_order;
                std::function<Rational(int, int, const QPoint&)> lhs_exact;
                if (overrides && overrides->identity1_lhs_exact)
                    lhs_exact = overrides->identity1_lhs_exact;
                task.body = [=](CheckResult& out) {
                    out.point_json = ordered_json{{"q", pt.q.to_string()},
                                                  {"x", pt.x.to_string()}}
                                         .dump();
                    const bool both = mode == Mode::both;
                    ordered_json lhs_j, rhs_j;
                    bool ok = true;
                    std::string reasons;
                    if (wants_exact(mode)) {
                        const Rational le =
                            lhs_exact ? lhs_exact(n, m, pt)
                                      : std::get<Rational>(identity1_side(
                                            Side::lhs, n, m, pt, EvalMode::exact()));
                        const Rational re = std::get<Rational>(
                            identity1_side(Side::rhs, n, m, pt, EvalMode::exact()));
                        if (both) {
                            lhs_j["exact"] = j_rat(le);
                            rhs_j["exact"] = j_rat(re);
                        } else {
                            lhs_j = j_rat(le);
                            rhs_j = j_rat(re);
                        }
                        if (le != re) {
                            ok = false;
                            append_reason(reasons, "exact sides differ");
                        }
                    }
                    if (wants_series(mode)) {
                        const EvalMode sm = EvalMode::q_series(q_order);
                        const QSeries ls = std::get<QSeries>(
                            identity1_side(Side::lhs, n, m, pt, sm));
                        const QSeries rs = std::get<QSeries>(
                            identity1_side(Side::rhs, n, m, pt, sm));
                        if (both) {
                            lhs_j["series"] = j_qseries(ls);
                            rhs_j["series"] = j_qseries(rs);
                        } else {
                            lhs_j = j_qseries(ls);
                            rhs_j = j_qseries(rs);
                        }
                        if (ls != rs) {
                            ok = false;
                            append_reason(reasons, "series sides differ");
                        }
                        if (both) {
                            // cross-mode consistency: the [w^m] residue
                            // rewrite must reproduce the series-mode LHS
                            const QSeries wx =
                                identity1_w_extraction(n, m, pt.x, q_order);
                            out.extra_json =
                                ordered_json{{"w_extraction", j_qseries(wx)}}.dump();
                            if (wx != ls) {
                                ok = false;
                                append_reason(reasons,
                                              "w-extraction differs from series lhs");
                            }
                        }
                    }
                    out.lhs_json = lhs_j.dump();
                    out.rhs_json = rhs_j.dump();
                    out.equal = ok;
                    out.note = reasons;
                };
                tasks.push_back(std::move(task));
            }
}

void build_identity2(std::vector<Task>& tasks, const SampleConfig& cfg,
                     const std::vector<QPoint>& pts, const SuiteOverrides* overrides) {
    for (int n = 0; n <= cfg.n_max; ++n)
        for (int trial = 0; trial < cfg.trials; ++trial) {
            Task task;
            task.suite = "identity2";
            task.params = {{"n", n}, {"trial", trial}};
            if (wants_series(cfg.mode)) task.params.push_back({"Q", cfg.q_order});
            const QPoint pt = pts[static_cast<std::size_t>(trial)];
            const Mode mode = cfg.mode;
            const int q_order = cfg.q_order;
            std::function<Rational(int, const QPoint&)> lhs_exact;
            if (overrides && overrides->identity2_lhs_exact)
                lhs_exact = overrides->identity2_lhs_exact;
            task.body = [=](CheckResult& out) {
                out.point_json = ordered_json{{"q", pt.q.to_string()},
                                              {"x", pt.x.to_string()},
                                              {"t", pt.t.to_string()}}
                                     .dump();
                const bool both = mode == Mode::both;
                ordered_json lhs_j, rhs_j;
                bool ok = true;
                std::string reasons;
                if (wants_exact(mode)) {
                    const Rational le =
                        lhs_exact ? lhs_exact(n, pt)
                                  : std::get<Rational>(identity2_side(
                                        Side::lhs, n, pt, EvalMode::exact()));
                    const Rational re = std::get<Rational>(
                        identity2_side(Side::rhs, n, pt, EvalMode::exact()));
                    if (both) {
                        lhs_j["exact"] = j_rat(le);
                        rhs_j["exact"] = j_rat(re);
                    } else {
                        lhs_j = j_rat(le);
                        rhs_j = j_rat(re);
                    }
                    if (le != re) {
                        ok = false;
                        append_reason(reasons, "exact sides differ");
                    }
                }
                if (wants_series(mode)) {
                    const EvalMode sm = EvalMode::q_series(q_order);
                    const QSeries ls =
                        std::get<QSeries>(identity2_side(Side::lhs, n, pt, sm));
                    const QSeries rs =
                        std::get<QSeries>(identity2_side(Side::rhs, n, pt, sm));
                    if (both) {
                        lhs_j["series"] = j_qseries(ls);
                        rhs_j["series"] = j_qseries(rs);
                    } else {
                        lhs_j = j_qseries(ls);
                        rhs_j = j_qseries(rs);
                    }
                    if (ls != rs) {
                        ok = false;
                        append_reason(reasons, "series sides differ");
                    }
                }
                out.lhs_json = lhs_j.dump();
                out.rhs_json = rhs_j.dump();
                out.equal = ok;
                out.note = reasons;
            };
            tasks.push_back(std::move(task));
        }
}

void build_dilcher(std::vector<Task>& tasks, const SampleConfig& cfg,
                   const std::vector<QPoint>& pts) {
    if (!wants_exact(cfg.mode)) return; // exact-arithmetic cross-method check
    for (int n = 1; n <= cfg.n_max; ++n)
        for (int m = 1; m <= cfg.m_max; ++m)
            for (int trial = 0; trial < cfg.trials; ++trial) {
                Task task;
                task.suite = "dilcher";
                task.params = {{"n", n}, {"m", m}, {"trial", trial}};
                const QPoint pt = pts[static_cast<std::size_t>(trial)];
                task.body = [=](CheckResult& out) {
                    out.point_json = ordered_json{{"q", pt.q.to_string()}}.dump();
                    const Rational lhs =
                        dilcher_coefficient(n, m, pt, DilcherMethod::w_extraction);
                    const Rational rhs =
                        dilcher_coefficient(n, m, pt, DilcherMethod::nested_sum);
                    out.lhs_json = j_rat(lhs).dump();
                    out.rhs_json = j_rat(rhs).dump();
                    out.equal = lhs == rhs;
                    if (!out.equal) out.note = "w-extraction and nested sum disagree";
                };
                tasks.push_back(std::move(task));
            }
}

void build_product_lemma(std::vector<Task>& tasks, const SampleConfig& cfg,
                         const std::vector<QPoint>& pts) {
    if (!wants_series(cfg.mode)) return; // the lemma lives in the series ring
    constexpr int kWOrder = 4;
    const int q_order = cfg.q_order;
    // pinned x values exercised on every run, then one sampled x per trial
    const std::vector<Rational> pinned = {Rational(1), Rational(1, 2), Rational(-2, 3)};
    auto add_cell = [&](const Rational& x, long cell_id, bool is_pinned, long trial) {
        Task task;
        task.suite = "product_lemma";
        task.params = {{"W", kWOrder}, {"Q", q_order}};
        task.params.push_back(is_pinned ? std::pair<std::string, long>{"pinned", cell_id}
                                        : std::pair<std::string, long>{"trial", trial});
        task.body = [=](CheckResult& out) {
            out.point_json = ordered_json{{"x", x.to_string()}}.dump();
            const WPoly lhs = product_expansion_side(Side::lhs, kWOrder, q_order, x);
            const WPoly rhs = product_expansion_side(Side::rhs, kWOrder, q_order, x);
            out.lhs_json = j_wpoly(lhs).dump();
            out.rhs_json = j_wpoly(rhs).dump();
            bool ok = true;
            std::string reasons;
            if (lhs != rhs) {
                ok = false;
                append_reason(reasons, "product sides differ");
            }
            // the displayed [w^2] double sums, in both the h-indexed form
            //   sum_{h1<h2} (xq^{h1}/(1+xq^{h1}))(xq^{h2}/(1+xq^{h2}))
            // and the rearranged k-indexed form
            //   sum_{k1<k2} (-x)^{k2} b_{k1} b_{k2}
            const QSeries one = q_constant(q_order, Rational(1));
            std::vector<QSeries> c, b;
            c.reserve(static_cast<std::size_t>(q_order) + 1);
            b.reserve(static_cast<std::size_t>(q_order) + 1);
            c.push_back(q_zero(q_order));
            b.push_back(q_zero(q_order));
            for (int h = 1; h <= q_order; ++h) {
                const QSeries xqh = q_monomial(q_order, h, x);
                c.push_back(xqh * reciprocal(one + xqh));
                b.push_back(q_monomial(q_order, h, Rational(1)) *
                            reciprocal(one - q_monomial(q_order, h, Rational(1))));
            }
            QSeries w2_h = q_zero(q_order);
            QSeries w2_k = q_zero(q_order);
            Rational negx_pow(1); // (-x)^{k2}, advanced with k2
            for (int k2 = 1; k2 <= q_order; ++k2) {
                negx_pow *= -x;
                for (int k1 = 1; k1 < k2; ++k1) {
                    if (k1 + k2 > q_order) break; // term vanishes mod q^{Q+1}
                    w2_h += c[static_cast<std::size_t>(k1)] * c[static_cast<std::size_t>(k2)];
                    w2_k += (b[static_cast<std::size_t>(k1)] * b[static_cast<std::size_t>(k2)]) *
                            negx_pow;
                }
            }
            out.extra_json = ordered_json{{"w2_h_form", j_qseries(w2_h)},
                                          {"w2_k_form", j_qseries(w2_k)}}
                                 .dump();
            if (lhs.coeff(2) != w2_h) {
                ok = false;
                append_reason(reasons, "[w^2] differs from h-indexed double sum");
            }
            if (lhs.coeff(2) != w2_k) {
                ok = false;
                append_reason(reasons, "[w^2] differs from k-indexed double sum");
            }
            out.equal = ok;
            out.note = reasons;
        };
        tasks.push_back(std::move(task));
    };
    for (std::size_t i = 0; i < pinned.size(); ++i)
        add_cell(pinned[i], static_cast<long>(i), true, 0);
    for (int trial = 0; trial < cfg.trials; ++trial)
        add_cell(pts[static_cast<std::size_t>(trial)].x, 0, false, trial);
}

constexpr std::uint64_t kTagTelescoping = 0x100;
constexpr std::uint64_t kTagCauchyZ = 0x200;

void build_telescoping(std::vector<Task>& tasks, const SampleConfig& cfg,
                       const std::vector<QPoint>&) {
    if (!wants_exact(cfg.mode)) return; // exact rational-point check
    const int n_top = std::min(cfg.n_max, 6);
    // cells: full sums N = n for each n, one partial-sum cell N < n, and a
    // pinned x = 0 cell where both sides collapse to zero
    struct Cell {
        int n;
        int upper;
        bool zero_x;
    };
    std::vector<Cell> cells;
    for (int n = 1; n <= n_top; ++n) cells.push_back({n, n, false});
    if (n_top >= 2) cells.push_back({n_top, std::max(1, n_top / 2), false});
    cells.push_back({std::min(3, n_top), std::min(3, n_top), true});
    for (std::size_t cell_id = 0; cell_id < cells.size(); ++cell_id) {
        const Cell cell = cells[cell_id];
        for (int trial = 0; trial < cfg.trials; ++trial) {
            Task task;
            task.suite = "telescoping";
            task.params = {{"n", cell.n}, {"N", cell.upper}, {"trial", trial}};
            if (cell.zero_x) task.params.push_back({"pinned", 1});
            const std::uint64_t seed = cfg.seed;
            const int bound = cfg.denominator_bound;
            task.body = [=](CheckResult& out) {
                SplitMix64 rng =
                    trial_stream(seed, trial, kTagTelescoping + cell_id);
                // joint rejection keeps every w*a_h away from 1
                std::vector<Rational> a;
                Rational w, x;
                constexpr int kBudget = 4096;
                bool found = false;
                for (int attempt = 0; attempt < kBudget && !found; ++attempt) {
                    a.clear();
                    for (int i = 0; i < cell.n; ++i) a.push_back(sample_rational(rng, bound));
                    w = sample_rational(rng, bound);
                    x = cell.zero_x ? Rational(0) : sample_rational(rng, bound);
                    found = true;
                    for (const Rational& ai : a)
                        if (w * ai == Rational(1)) found = false;
                }
                if (!found) throw SamplingError("telescoping: no admissible (a, w) in budget");
                ordered_json a_json = ordered_json::array();
                for (const Rational& ai : a) a_json.push_back(ai.to_string());
                out.point_json = ordered_json{{"a", a_json},
                                              {"x", x.to_string()},
                                              {"w", w.to_string()}}
                                     .dump();
                const auto [lhs, rhs] = telescoping_sides(a, x, w, cell.upper);
                out.lhs_json = j_rat(lhs).dump();
                out.rhs_json = j_rat(rhs).dump();
                bool ok = lhs == rhs;
                std::string reasons;
                if (!ok) append_reason(reasons, "telescoping sides differ");
                if (cell.zero_x && !lhs.is_zero()) {
                    ok = false;
                    append_reason(reasons, "x=0 side not zero");
                }
                out.equal = ok;
                out.note = reasons;
            };
            tasks.push_back(std::move(task));
        }
    }
}

void build_cauchy(std::vector<Task>& tasks, const SampleConfig& cfg,
                  const std::vector<QPoint>& pts) {
    if (!wants_series(cfg.mode)) return; // a q-series identity
    const int q_order = cfg.q_order;
    // pinned collapse cases (z=1: both sides 1; z=0: Euler's series), then
    // one sampled (z, x) pair per trial
    auto add_cell = [&](const Rational& z, const Rational& x, bool expect_one,
                        bool is_pinned, long id) {
        Task task;
        task.suite = "cauchy";
        task.params = {{"Q", q_order}};
        task.params.push_back(is_pinned ? std::pair<std::string, long>{"pinned", id}
                                        : std::pair<std::string, long>{"trial", id});
        task.body = [=](CheckResult& out) {
            out.point_json =
                ordered_json{{"z", z.to_string()}, {"x", x.to_string()}}.dump();
            const QSeries lhs = cauchy_side(Side::lhs, z, x, q_order);
            const QSeries rhs = cauchy_side(Side::rhs, z, x, q_order);
            out.lhs_json = j_qseries(lhs).dump();
            out.rhs_json = j_qseries(rhs).dump();
            bool ok = true;
            std::string reasons;
            if (lhs != rhs) {
                ok = false;
                append_reason(reasons, "sides differ");
            }
            if (expect_one && lhs != q_constant(q_order, Rational(1))) {
                ok = false;
                append_reason(reasons, "z=1 side did not collapse to 1");
            }
            out.equal = ok;
            out.note = reasons;
        };
        tasks.push_back(std::move(task));
    };
    add_cell(Rational(1), Rational(1, 3), true, true, 0);
    add_cell(Rational(0), Rational(1, 2), false, true, 1);
    for (int trial = 0; trial < cfg.trials; ++trial) {
        SplitMix64 rng = trial_stream(cfg.seed, trial, kTagCauchyZ);
        const Rational z = sample_rational(rng, cfg.denominator_bound);
        add_cell(z, pts[static_cast<std::size_t>(trial)].x, false, false, trial);
    }
}

void build_qrice(std::vector<Task>& tasks, const SampleConfig& cfg,
                 const std::vector<QPoint>& pts) {
    if (!wants_exact(cfg.mode)) return; // evaluates at exact points q^{-i}
    for (int n = 1; n <= cfg.n_max; ++n) {
        // f == 1 collapses the alternating sum to 1 (start=1) and 0 (start=0)
        for (int trial = 0; trial < cfg.trials; ++trial) {
            Task task;
            task.suite = "qrice_consistency/f_one";
            task.params = {{"n", n}, {"trial", trial}};
            const QPoint pt = pts[static_cast<std::size_t>(trial)];
            task.body = [=](CheckResult& out) {
                out.point_json = ordered_json{{"q", pt.q.to_string()}}.dump();
                auto one_fn = [](const Rational&) { return Rational(1); };
                const Rational s1 = alt_q_rice_sum(one_fn, n, pt.q, 1);
                const Rational s0 = alt_q_rice_sum(one_fn, n, pt.q, 0);
                out.lhs_json = ordered_json{{"start1", j_rat(s1)}, {"start0", j_rat(s0)}}.dump();
                out.rhs_json = ordered_json{{"start1", "1/1"}, {"start0", "0/1"}}.dump();
                out.equal = s1 == Rational(1) && s0 == Rational(0);
                if (!out.equal) out.note = "f=1 collapse failed";
            };
            tasks.push_back(std::move(task));
        }
        // the f_1 route reproduces the Eq.(1) LHS summand-by-summand
        for (int m = 1; m <= cfg.m_max; ++m)
            for (int trial = 0; trial < cfg.trials; ++trial) {
                Task task;
                task.suite = "qrice_consistency/identity1_terms";
                task.params = {{"n", n}, {"m", m}, {"trial", trial}};
                const QPoint pt = pts[static_cast<std::size_t>(trial)];
                task.body = [=](CheckResult& out) {
                    out.point_json = ordered_json{{"q", pt.q.to_string()},
                                                  {"x", pt.x.to_string()}}
                                         .dump();
                    const auto f1 = make_identity1_integrand(pt.q, pt.x, m, n);
                    const Rational q_inv = inverse(pt.q);
                    ordered_json via = ordered_json::array();
                    ordered_json direct = ordered_json::array();
                    bool ok = true;
                    std::string reasons;
                    Rational v = q_inv;
                    for (int i = 1; i <= n; ++i) {
                        const Rational term_via = gaussian_binomial(n, i, pt.q) *
                                                  Rational(alt_sign(i)) *
                                                  pt.q.pow(binom2(i)) * f1(v);
                        const Rational term_direct =
                            identity1_lhs_summand(i, n, m, pt.q, pt.x);
                        via.push_back(term_via.to_string());
                        direct.push_back(term_direct.to_string());
                        if (term_via != term_direct) {
                            ok = false;
                            append_reason(reasons, "term i=" + std::to_string(i) + " differs");
                        }
                        v *= q_inv;
                    }
                    const Rational total_via = alt_q_rice_sum(f1, n, pt.q, 1);
                    const Rational total_direct = identity1_lhs(n, m, pt.q, pt.x);
                    out.lhs_json =
                        ordered_json{{"terms", via}, {"total", j_rat(total_via)}}.dump();
                    out.rhs_json =
                        ordered_json{{"terms", direct}, {"total", j_rat(total_direct)}}.dump();
                    if (total_via != total_direct) {
                        ok = false;
                        append_reason(reasons, "totals differ");
                    }
                    out.equal = ok;
                    out.note = reasons;
                };
                tasks.push_back(std::move(task));
            }
        // and the f_2 route for Eq.(2), starting at i = 0
        for (int trial = 0; trial < cfg.trials; ++trial) {
            Task task;
            task.suite = "qrice_consistency/identity2_terms";
            task.params = {{"n", n}, {"trial", trial}};
            const QPoint pt = pts[static_cast<std::size_t>(trial)];
            task.body = [=](CheckResult& out) {
                out.point_json = ordered_json{{"q", pt.q.to_string()},
                                              {"x", pt.x.to_string()},
                                              {"t", pt.t.to_string()}}
                                     .dump();
                const auto f2 = make_identity2_integrand(pt.q, pt.x, pt.t, n);
                const Rational q_inv = inverse(pt.q);
                ordered_json via = ordered_json::array();
                ordered_json direct = ordered_json::array();
                bool ok = true;
                std::string reasons;
                Rational v(1);
                for (int i = 0; i <= n; ++i) {
                    const Rational term_via = gaussian_binomial(n, i, pt.q) *
                                              Rational(alt_sign(i)) *
                                              pt.q.pow(binom2(i)) * f2(v);
                    const Rational term_direct =
                        identity2_lhs_summand(i, n, pt.q, pt.x, pt.t);
                    via.push_back(term_via.to_string());
                    direct.push_back(term_direct.to_string());
                    if (term_via != term_direct) {
                        ok = false;
                        append_reason(reasons, "term i=" + std::to_string(i) + " differs");
                    }
                    v *= q_inv;
                }
                const Rational total_via = alt_q_rice_sum(f2, n, pt.q, 0);
                const Rational total_direct = identity2_lhs(n, pt.q, pt.x, pt.t);
                out.lhs_json =
                    ordered_json{{"terms", via}, {"total", j_rat(total_via)}}.dump();
                out.rhs_json =
                    ordered_json{{"terms", direct}, {"total", j_rat(total_direct)}}.dump();
                if (total_via != total_direct) {
                    ok = false;
                    append_reason(reasons, "totals differ");
                }
                out.equal = ok;
                out.note = reasons;
            };
            tasks.push_back(std::move(task));
        }
    }
}

} // namespace

const char* suite_name(Suite which) {
    switch (which) {
        case Suite::identity1: return "identity1";
        case Suite::identity2: return "identity2";
        case Suite::dilcher: return "dilcher";
        case Suite::product_lemma: return "product_lemma";
        case Suite::telescoping: return "telescoping";
        case Suite::cauchy: return "cauchy";
        case Suite::qrice_consistency: return "qrice_consistency";
        case Suite::all: return "all";
    }
    return "?";
}

std::optional<Suite> suite_from_name(std::string_view name) {
    for (Suite s : {Suite::identity1, Suite::identity2, Suite::dilcher,
                    Suite::product_lemma, Suite::telescoping, Suite::cauchy,
                    Suite::qrice_consistency, Suite::all})
        if (name == suite_name(s)) return s;
    return std::nullopt;
}

std::size_t Report::pass_count() const {
    std::size_t n = 0;
    for (const CheckResult& c : checks) n += c.equal ? 1 : 0;
    return n;
}

std::size_t Report::fail_count() const { return checks.size() - pass_count(); }

Report run_suite(Suite which, const SampleConfig& config,
                 const SuiteOverrides* overrides) {
    validate(config);
    Report report;
    report.config = config;
    report.suite = suite_name(which);
    // one point per trial, shared by every suite in this run
    std::vector<QPoint> pts;
    pts.reserve(static_cast<std::size_t>(config.trials));
    for (int trial = 0; trial < config.trials; ++trial)
        pts.push_back(sample_qpoint(config, trial));
    std::vector<Task> tasks;
    auto add = [&](Suite s) {
        switch (s) {
            case Suite::identity1: build_identity1(tasks, config, pts, overrides); break;
            case Suite::identity2: build_identity2(tasks, config, pts, overrides); break;
            case Suite::dilcher: build_dilcher(tasks, config, pts); break;
            case Suite::product_lemma: build_product_lemma(tasks, config, pts); break;
            case Suite::telescoping: build_telescoping(tasks, config, pts); break;
            case Suite::cauchy: build_cauchy(tasks, config, pts); break;
            case Suite::qrice_consistency: build_qrice(tasks, config, pts); break;
            case Suite::all: break;
        }
    };
    if (which == Suite::all) {
        for (Suite s : {Suite::identity1, Suite::identity2, Suite::dilcher,
                        Suite::product_lemma, Suite::telescoping, Suite::cauchy,
                        Suite::qrice_consistency})
            add(s);
    } else {
        add(which);
    }
    report.checks = execute(std::move(tasks), config.threads);
    return report;
}

} // namespace qrice

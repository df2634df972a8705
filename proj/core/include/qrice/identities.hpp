#pragma once

#include <functional>
#include <utility>
#include <variant>
#include <vector>

#include "qrice/qfunctions.hpp"
#include "qrice/qpoint.hpp"
#include "qrice/series.hpp"

namespace qrice {

enum class Side { lhs, rhs };

/// Evaluation strategy: `exact` computes at the rational point (q, x, t);
/// `q_series(Q)` freezes x and t at their rational values and expands in q
/// mod q^{Q+1}.
class EvalMode {
public:
    static EvalMode exact() { return EvalMode(-1); }
    static EvalMode q_series(int q_order) {
        if (q_order < 1) throw Error("series mode needs q_order >= 1");
        return EvalMode(q_order);
    }
    bool is_exact() const { return q_order_ < 0; }
    int q_order() const {
        if (is_exact()) throw Error("exact mode has no series order");
        return q_order_;
    }

private:
    explicit EvalMode(int q_order) : q_order_(q_order) {}
    int q_order_;
};

/// A side's value: exact rational or truncated q-series, depending on mode.
using SideValue = std::variant<Rational, QSeries>;

// ---------------------------------------------------------------------------
// Generic evaluators, usable over exact rationals and over the series ring.
// Throughout, q and x (and t) are already elements of the target ring R.
// ---------------------------------------------------------------------------

/// The i-th summand of the Eq.(1) left side:
///   [n choose i]_q (-1)^{i-1} (x+1)(x+q)...(x+q^{i-1}) q^{mi}/(1-q^i)^m.
template <class R>
R identity1_lhs_summand(int i, int n, int m, const R& q, const R& x) {
    const R one = one_like(q);
    const R qi = ring_pow(q, i);
    const R block = qi * inverse(one - qi); // q^i/(1-q^i)
    R term = gaussian_binomial(n, i, q) * rising_product(x, q, i) *
             ring_pow(block, m);
    return (alt_sign(i) < 0) ? -term : term;
}

template <class R>
R identity1_lhs(int n, int m, const R& q, const R& x) {
    if (n < 1 || m < 1) throw Error("Eq.(1) needs n >= 1 and m >= 1");
    R sum = zero_like(q);
    for (int i = 1; i <= n; ++i) sum += identity1_lhs_summand(i, n, m, q, x);
    return sum;
}

/// Sum over nondecreasing tuples lo <= j_1 <= ... <= j_len <= hi of
/// prod_j b[j_1]...b[j_len]; empty tuple (len = 0) contributes 1. The
/// recursion mirrors the displayed nested sum one index per level, carrying
/// the running product.
template <class R>
R nondecreasing_tuple_sum(const std::vector<R>& b, int lo, int hi, int len) {
    const R one = one_like(b.at(0));
    if (len == 0) return one;
    if (lo > hi) return zero_like(b.at(0));
    R total = zero_like(b.at(0));
    std::function<void(int, int, const R&)> descend =
        [&](int slot, int start, const R& acc) {
            if (slot == len) {
                total += acc;
                return;
            }
            for (int j = start; j <= hi; ++j)
                descend(slot + 1, j, acc * b[static_cast<std::size_t>(j)]);
        };
    descend(0, lo, one);
    return total;
}

/// The Eq.(1) right side:
///   sum_{i=1..n} (1-(-x)^i) q^i/(1-q^i)
///     * sum_{i<=i_2<=...<=i_m<=n} prod_j q^{i_j}/(1-q^{i_j}).
/// The inner nested sum has m-1 indices; for m=1 it is empty and equals 1.
template <class R>
R identity1_rhs(int n, int m, const R& q, const R& x) {
    if (n < 1 || m < 1) throw Error("Eq.(1) needs n >= 1 and m >= 1");
    const R one = one_like(q);
    const auto b = geometric_blocks(q, n);
    const R negx = -x;
    R negx_pow = one;
    R total = zero_like(q);
    for (int i = 1; i <= n; ++i) {
        negx_pow = negx_pow * negx;
        total += (one - negx_pow) * b[static_cast<std::size_t>(i)] *
                 nondecreasing_tuple_sum(b, i, n, m - 1);
    }
    return total;
}

/// The i-th summand of the Eq.(2) left side:
///   [n choose i]_q (-1)^{i-1} (x+1)...(x+q^{i-1}) q^i/(1-t q^i).
/// At i = 0 this is -1/(1-t): empty rising product and sign (-1)^{-1}.
template <class R>
R identity2_lhs_summand(int i, int n, const R& q, const R& x, const R& t) {
    const R one = one_like(q);
    const R qi = ring_pow(q, i);
    R term = gaussian_binomial(n, i, q) * rising_product(x, q, i) * qi *
             inverse(one - t * qi);
    return (alt_sign(i) < 0) ? -term : term;
}

template <class R>
R identity2_lhs(int n, const R& q, const R& x, const R& t) {
    if (n < 0) throw Error("Eq.(2) needs n >= 0");
    R sum = zero_like(q);
    for (int i = 0; i <= n; ++i) sum += identity2_lhs_summand(i, n, q, x, t);
    return sum;
}

/// The Eq.(2) right side:
///   -(q;q)_n/(t;q)_{n+1} * sum_{i=0..n} (t;q)_i/(q;q)_i (-xq)^i,
/// with the Pochhammer ratios built incrementally.
template <class R>
R identity2_rhs(int n, const R& q, const R& x, const R& t) {
    if (n < 0) throw Error("Eq.(2) needs n >= 0");
    const R one = one_like(q);
    const R prefactor =
        -(q_pochhammer(q, q, n) * inverse(q_pochhammer(t, q, n + 1)));
    R sum = zero_like(q);
    R poch_t = one;        // (t;q)_i
    R poch_q = one;        // (q;q)_i
    R xq_pow = one;        // (-xq)^i
    R t_shift = t;         // t q^i
    R q_shift = q;         // q^{i+1}
    const R neg_xq = -(x * q);
    for (int i = 0; i <= n; ++i) {
        if (i > 0) {
            poch_t = poch_t * (one - t_shift);
            t_shift = t_shift * q;
            poch_q = poch_q * (one - q_shift);
            q_shift = q_shift * q;
            xq_pow = xq_pow * neg_xq;
        }
        sum += poch_t * inverse(poch_q) * xq_pow;
    }
    return prefactor * sum;
}

/// [w^m] of prod_{j=1..n} 1/(1 - w b_j), b_j = q^j/(1-q^j), computed by
/// actually expanding the product of reciprocals in the w-polynomial ring.
template <class R>
R dilcher_w_extraction(int n, int m, const R& q) {
    if (n < 1 || m < 1) throw Error("Dilcher coefficient needs n >= 1, m >= 1");
    using WS = TruncSeries<R>;
    const R one = one_like(q);
    const auto b = geometric_blocks(q, n);
    WS acc = WS::constant(m, one);
    for (int j = 1; j <= n; ++j) {
        WS factor = WS::constant(m, one);
        factor.set_coeff(1, -b[static_cast<std::size_t>(j)]);
        acc = acc * reciprocal(factor);
    }
    return acc.coeff(m);
}

/// The same coefficient by direct enumeration of the displayed nested sum
///   sum_{1<=i_1<=...<=i_m<=n} prod_j b_{i_j}.
template <class R>
R dilcher_nested_sum(int n, int m, const R& q) {
    if (n < 1 || m < 1) throw Error("Dilcher coefficient needs n >= 1, m >= 1");
    const auto b = geometric_blocks(q, n);
    return nondecreasing_tuple_sum(b, 1, n, m);
}

// ---------------------------------------------------------------------------
// Concrete, mode-aware entry points.
// ---------------------------------------------------------------------------

/// One side of Eq.(1), in the requested mode.
SideValue identity1_side(Side side, int n, int m, const QPoint& ctx,
                         const EvalMode& mode);

/// One side of Eq.(2), in the requested mode.
SideValue identity2_side(Side side, int n, const QPoint& ctx,
                         const EvalMode& mode);

enum class DilcherMethod { w_extraction, nested_sum };

/// [w^m] 1/((1-w q/(1-q))...(1-w q^n/(1-q^n))) at ctx.q, by either method;
/// the two methods are mutual oracles.
Rational dilcher_coefficient(int n, int m, const QPoint& ctx, DilcherMethod method);

/// One side of the product-expansion lemma
///   prod_{h>=1} (1 + x w q^h/(1+x q^h))
///     = 1 - w sum_{i>=1} (-x)^i q^i/(1-q^i) prod_{1<=h<i}(1 - w q^h/(1-q^h)),
/// as a WPoly with w-degree cap W and q-order Q. The h-product and i-sum are
/// truncated at Q, exact mod q^{Q+1} since term h (resp. i) has q-valuation
/// >= h (resp. >= i).
WPoly product_expansion_side(Side side, int w_order, int q_order, const Rational& x);

/// Both sides of the telescoping identity
///   sum_{i=1..N} (-x)^i w a_i (1-wa_1)...(1-wa_n)/((1-wa_i)...(1-wa_n))
///     = sum_{i=1..N} (-x)^i w a_i prod_{1<=h<i}(1-wa_h)
/// evaluated literally (no symbolic cancellation) at the rational w.
/// `a` holds a_1..a_n in order. Returns (lhs, rhs).
std::pair<Rational, Rational> telescoping_sides(const std::vector<Rational>& a,
                                                const Rational& x,
                                                const Rational& w, int upper);

/// One side of Cauchy's formula
///   (-xzq;q)_inf/(-xq;q)_inf = sum_{m>=0} (z;q)_m/(q;q)_m (-xq)^m
/// as a q-series mod q^{Q+1}; products and sum truncated at index Q.
QSeries cauchy_side(Side side, const Rational& z, const Rational& x, int q_order);

/// The [w^m] residue rewrite of the Eq.(1) left side:
///   [w^m] { prod_{j=1..n} 1/(1 - w b_j)
///           * (1 - w sum_{i=1..n} (-x)^i b_i prod_{1<=h<i}(1 - w b_h)) },
/// b_j = q^j/(1-q^j), as a q-series mod q^{Q+1}. The expansion-lemma sum is
/// capped at i <= n — the finite reading of the source display, and the one
/// under which this equals the series-mode Eq.(1) left side.
QSeries identity1_w_extraction(int n, int m, const Rational& x, int q_order);

/// Residue of numerator(z)/(z - pole) at its simple pole: numerator(pole).
Rational residue_simple_pole(const std::function<Rational(const Rational&)>& numerator,
                             const Rational& pole);

/// The Eq.(1) q-Rice integrand f_1 with parameters frozen:
///   f_1(z) = 1/(z-1)^m * prod_{h>=1} (1+x z q^h)/(1+x q^h),
/// restricted to the evaluation points z = q^{-i}, 0 <= i <= horizon, where
/// the infinite product collapses to prod_{j=0..i-1}(1 + x q^{-j}). Calls at
/// other points, or at the pole z = 1 (i = 0), throw.
std::function<Rational(const Rational&)> make_identity1_integrand(
    const Rational& q, const Rational& x, int m, int horizon);

/// The Eq.(2) integrand f_2(z) = 1/(z-t) * (same collapsing product); defined
/// at z = 1 and poles only at z = t.
std::function<Rational(const Rational&)> make_identity2_integrand(
    const Rational& q, const Rational& x, const Rational& t, int horizon);

} // namespace qrice

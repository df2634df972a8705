#include "qrice/identities.hpp"

#include <algorithm>

namespace qrice {

namespace {

/// Recovers the index i with v = q^{-i}, 0 <= i <= horizon; the q-Rice
/// integrands are defined only on that grid.
int recover_rice_index(const Rational& q, const Rational& v, int horizon) {
    Rational p = v; // v * q^i
    for (int i = 0; i <= horizon; ++i) {
        if (p.is_one()) return i;
        p *= q;
    }
    throw Error("integrand evaluated off the q-Rice grid {q^0,...,q^-" +
                std::to_string(horizon) + "}: z = " + v.to_string());
}

/// prod_{j=0..i-1} (1 + x q^{-j}) — the value the normalized product
/// prod_{h>=1} (1+xzq^h)/(1+xq^h) collapses to at z = q^{-i}.
Rational collapsed_product(const Rational& q, const Rational& x, int i) {
    const Rational q_inv = inverse(q);
    Rational acc(1);
    Rational p(1); // q^{-j}
    for (int j = 0; j < i; ++j) {
        acc *= Rational(1) + x * p;
        p *= q_inv;
    }
    return acc;
}

/// 1 - w*c as a WPoly (cap W >= 1 checked by set_coeff).
WPoly one_minus_w_times(const QSeries& c, int w_order) {
    WPoly f = WPoly::constant(w_order, one_like(c));
    f.set_coeff(1, -c);
    return f;
}

/// The expansion-lemma correction sum S(w) = sum_{i=lo..hi} (-x)^i b_i
/// prod_{1<=h<i}(1 - w b_h); shared by the lemma's right side (hi = Q) and
/// the capped w-extraction (hi = n).
WPoly expansion_sum(const std::vector<QSeries>& b, const Rational& x,
                    int w_order, int hi) {
    WPoly sum = WPoly::zero(w_order, zero_like(b.at(0)));
    WPoly prefix = WPoly::constant(w_order, one_like(b.at(0)));
    Rational negx_pow(1);
    for (int i = 1; i <= hi; ++i) {
        negx_pow *= -x;
        sum = sum + prefix * (b[static_cast<std::size_t>(i)] * negx_pow);
        if (i < hi)
            prefix = prefix * one_minus_w_times(b[static_cast<std::size_t>(i)], w_order);
    }
    return sum;
}

} // namespace

SideValue identity1_side(Side side, int n, int m, const QPoint& ctx,
                         const EvalMode& mode) {
    if (n < 1 || m < 1) throw Error("Eq.(1) needs n >= 1 and m >= 1");
    if (mode.is_exact()) {
        QPoint pt = ctx;
        pt.horizon = std::max(ctx.horizon, n);
        require_admissible(pt, 0);
        return side == Side::lhs ? identity1_lhs(n, m, ctx.q, ctx.x)
                                 : identity1_rhs(n, m, ctx.q, ctx.x);
    }
    const int q_order = mode.q_order();
    const QSeries q = q_monomial(q_order, 1);
    const QSeries x = q_constant(q_order, ctx.x);
    return side == Side::lhs ? identity1_lhs(n, m, q, x)
                             : identity1_rhs(n, m, q, x);
}

SideValue identity2_side(Side side, int n, const QPoint& ctx,
                         const EvalMode& mode) {
    if (n < 0) throw Error("Eq.(2) needs n >= 0");
    if (mode.is_exact()) {
        QPoint pt = ctx;
        pt.horizon = std::max(ctx.horizon, n);
        require_admissible(pt, 0);
        return side == Side::lhs ? identity2_lhs(n, ctx.q, ctx.x, ctx.t)
                                 : identity2_rhs(n, ctx.q, ctx.x, ctx.t);
    }
    if (ctx.t == Rational(1))
        throw PoleError("Eq.(2) series mode needs t != 1 (constant term of 1-tq^0)");
    const int q_order = mode.q_order();
    const QSeries q = q_monomial(q_order, 1);
    const QSeries x = q_constant(q_order, ctx.x);
    const QSeries t = q_constant(q_order, ctx.t);
    return side == Side::lhs ? identity2_lhs(n, q, x, t)
                             : identity2_rhs(n, q, x, t);
}

Rational dilcher_coefficient(int n, int m, const QPoint& ctx, DilcherMethod method) {
    if (n < 1 || m < 1) throw Error("Dilcher coefficient needs n >= 1, m >= 1");
    QPoint pt = ctx;
    pt.horizon = std::max(ctx.horizon, n);
    require_admissible(pt, 0);
    return method == DilcherMethod::w_extraction
               ? dilcher_w_extraction(n, m, ctx.q)
               : dilcher_nested_sum(n, m, ctx.q);
}

WPoly product_expansion_side(Side side, int w_order, int q_order, const Rational& x) {
    if (w_order < 1) throw Error("product expansion needs w-degree cap >= 1");
    if (q_order < 1) throw Error("product expansion needs q-order >= 1");
    const WPoly one = w_one(w_order, q_order);
    if (side == Side::lhs) {
        auto factor = [&](int h) {
            // 1 + w * x q^h/(1 + x q^h); deviation from 1 has q-valuation h
            const QSeries xqh = q_monomial(q_order, h, x);
            WPoly f = one;
            f.set_coeff(1, xqh * reciprocal(q_constant(q_order, Rational(1)) + xqh));
            return f;
        };
        return truncated_infinite_product(factor, q_order, one);
    }
    // 1 - w * sum_{i>=1}(-x)^i b_i prod_{h<i}(1 - w b_h); term i has
    // q-valuation >= i, so capping the sum at i <= Q is exact mod q^{Q+1}.
    const auto b = geometric_blocks(q_monomial(q_order, 1), q_order);
    const WPoly w_unit = w_monomial(w_order, 1, q_constant(q_order, Rational(1)));
    return one - w_unit * expansion_sum(b, x, w_order, q_order);
}

std::pair<Rational, Rational> telescoping_sides(const std::vector<Rational>& a,
                                                const Rational& x,
                                                const Rational& w, int upper) {
    const int n = static_cast<int>(a.size());
    if (n < 1) throw Error("telescoping identity needs at least one a_i");
    if (upper < 1 || upper > n)
        throw Error("telescoping upper limit must satisfy 1 <= N <= n");
    const Rational one(1);
    for (int h = 1; h <= n; ++h)
        if (w * a[static_cast<std::size_t>(h - 1)] == one)
            throw PoleError("telescoping denominator vanishes: w*a_" +
                            std::to_string(h) + " = 1");
    // Left side quotients evaluated literally: full product over suffix
    // product, with no symbolic cancellation against the right side.
    Rational full(1);
    for (int h = 1; h <= n; ++h) full *= one - w * a[static_cast<std::size_t>(h - 1)];
    std::vector<Rational> suffix(static_cast<std::size_t>(n) + 2, one);
    for (int i = n; i >= 1; --i)
        suffix[static_cast<std::size_t>(i)] =
            (one - w * a[static_cast<std::size_t>(i - 1)]) * suffix[static_cast<std::size_t>(i) + 1];
    Rational lhs, rhs;
    Rational prefix = one; // prod_{1<=h<i}(1 - w a_h)
    Rational negx_pow = one;
    for (int i = 1; i <= upper; ++i) {
        const Rational& ai = a[static_cast<std::size_t>(i - 1)];
        negx_pow *= -x;
        const Rational head = negx_pow * w * ai;
        lhs += head * full / suffix[static_cast<std::size_t>(i)];
        rhs += head * prefix;
        prefix *= one - w * ai;
    }
    return {lhs, rhs};
}

QSeries cauchy_side(Side side, const Rational& z, const Rational& x, int q_order) {
    if (q_order < 1) throw Error("Cauchy's formula needs q-order >= 1");
    const QSeries one = q_constant(q_order, Rational(1));
    if (side == Side::lhs) {
        auto factor = [&](int h) {
            // (1 + x z q^h)/(1 + x q^h); deviation x(z-1)q^h/(1+xq^h)
            return (one + q_monomial(q_order, h, x * z)) *
                   reciprocal(one + q_monomial(q_order, h, x));
        };
        return truncated_infinite_product(factor, q_order, one);
    }
    // sum_{m>=0} (z;q)_m/(q;q)_m (-xq)^m; term m has q-valuation >= m.
    QSeries sum = q_zero(q_order);
    QSeries poch_z = one; // (z;q)_m
    QSeries poch_q = one; // (q;q)_m
    Rational negx_pow(1); // (-x)^m
    for (int m = 0; m <= q_order; ++m) {
        if (m > 0) {
            const QSeries zq = (m - 1 == 0) ? q_constant(q_order, z)
                                            : q_monomial(q_order, m - 1, z);
            poch_z = poch_z * (one - zq);
            poch_q = poch_q * (one - q_monomial(q_order, m, Rational(1)));
            negx_pow *= -x;
        }
        sum += poch_z * reciprocal(poch_q) * q_monomial(q_order, m, negx_pow);
    }
    return sum;
}

QSeries identity1_w_extraction(int n, int m, const Rational& x, int q_order) {
    if (n < 1 || m < 1) throw Error("w-extraction needs n >= 1 and m >= 1");
    if (q_order < 1) throw Error("w-extraction needs q-order >= 1");
    const int w_order = m;
    const WPoly one = w_one(w_order, q_order);
    const auto b = geometric_blocks(q_monomial(q_order, 1), n);
    // Dilcher factor G(w) = prod_{j=1..n} 1/(1 - w b_j)
    WPoly dilcher_factor = one;
    for (int j = 1; j <= n; ++j)
        dilcher_factor =
            dilcher_factor * reciprocal(one_minus_w_times(b[static_cast<std::size_t>(j)], w_order));
    // Correction R_n(w) = 1 - w * sum_{i=1..n}(-x)^i b_i prod_{h<i}(1 - w b_h):
    // the expansion-lemma sum with its index capped at n, which is the finite
    // reading under which [w^m]{G * R_n} equals the Eq.(1) left side.
    const WPoly w_unit = w_monomial(w_order, 1, q_constant(q_order, Rational(1)));
    const WPoly correction = one - w_unit * expansion_sum(b, x, w_order, n);
    return (dilcher_factor * correction).coeff(m);
}

Rational residue_simple_pole(const std::function<Rational(const Rational&)>& numerator,
                             const Rational& pole) {
    return numerator(pole);
}

std::function<Rational(const Rational&)> make_identity1_integrand(
    const Rational& q, const Rational& x, int m, int horizon) {
    if (m < 1) throw Error("f_1 needs m >= 1");
    if (q.is_zero()) throw PoleError("integrand needs q != 0");
    return [q, x, m, horizon](const Rational& v) {
        const int i = recover_rice_index(q, v, horizon);
        if (i == 0)
            throw PoleError("f_1 has a pole of order " + std::to_string(m) + " at z = 1");
        return collapsed_product(q, x, i) * inverse((v - Rational(1)).pow(m));
    };
}

std::function<Rational(const Rational&)> make_identity2_integrand(
    const Rational& q, const Rational& x, const Rational& t, int horizon) {
    if (q.is_zero()) throw PoleError("integrand needs q != 0");
    return [q, x, t, horizon](const Rational& v) {
        const int i = recover_rice_index(q, v, horizon);
        if (v == t) throw PoleError("f_2 evaluated at its own pole z = t");
        return collapsed_product(q, x, i) * inverse(v - t);
    };
}

} // namespace qrice

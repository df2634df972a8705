#pragma once

#include <cstddef>
#include <ostream>
#include <type_traits>
#include <utility>
#include <vector>

#include "qrice/errors.hpp"
#include "qrice/rational.hpp"

namespace qrice {

inline constexpr std::size_t no_valuation = static_cast<std::size_t>(-1);

/// Truncated power series (equivalently, polynomial with a degree cap) over a
/// commutative coefficient ring R: coefficients c_0..c_Q represent the value
/// mod v^{Q+1} in the series variable v. Arithmetic follows the min-order
/// rule — combining caps Q1 and Q2 yields cap min(Q1, Q2) — so a result never
/// claims more precision than its inputs support.
///
/// The two instantiations used in this project:
///   QSeries = TruncSeries<Rational>   series in q
///   WPoly   = TruncSeries<QSeries>    polynomial in w with QSeries coefficients
template <class R>
class TruncSeries {
public:
    /// Wraps an explicit coefficient vector c_0..c_Q (must be non-empty).
    explicit TruncSeries(std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw Error("series needs at least the order-0 coefficient");
    }

    /// Zero series of the given order; `proto` fixes the coefficient shape.
    static TruncSeries zero(int order, const R& proto) {
        check_order(order);
        return TruncSeries(std::vector<R>(static_cast<std::size_t>(order) + 1,
                                          zero_like(proto)));
    }

    /// Constant series c + 0*v + ... + 0*v^order.
    static TruncSeries constant(int order, const R& value) {
        TruncSeries s = zero(order, value);
        s.c_[0] = value;
        return s;
    }

    /// Monomial value*v^k, zero elsewhere; k must respect the cap.
    static TruncSeries monomial(int order, int k, const R& value) {
        TruncSeries s = zero(order, value);
        if (k < 0 || k > order)
            throw DegreeCapError("monomial exponent " + std::to_string(k) +
                                 " outside cap " + std::to_string(order));
        s.c_[static_cast<std::size_t>(k)] = value;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const R& coeff(int k) const {
        if (k < 0 || k > order())
            throw DegreeCapError("coefficient " + std::to_string(k) +
                                 " beyond series cap " + std::to_string(order()));
        return c_[static_cast<std::size_t>(k)];
    }

    void set_coeff(int k, R value) {
        if (k < 0 || k > order())
            throw DegreeCapError("coefficient " + std::to_string(k) +
                                 " beyond series cap " + std::to_string(order()));
        c_[static_cast<std::size_t>(k)] = std::move(value);
    }

    TruncSeries& operator+=(const TruncSeries& other) { return *this = *this + other; }
    TruncSeries& operator-=(const TruncSeries& other) { return *this = *this - other; }
    TruncSeries& operator*=(const TruncSeries& other) { return *this = *this * other; }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        const std::size_t n = std::min(a.c_.size(), b.c_.size());
        std::vector<R> c;
        c.reserve(n);
        for (std::size_t i = 0; i < n; ++i) c.push_back(a.c_[i] + b.c_[i]);
        return TruncSeries(std::move(c));
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        const std::size_t n = std::min(a.c_.size(), b.c_.size());
        std::vector<R> c;
        c.reserve(n);
        for (std::size_t i = 0; i < n; ++i) c.push_back(a.c_[i] - b.c_[i]);
        return TruncSeries(std::move(c));
    }

    friend TruncSeries operator-(const TruncSeries& a) {
        std::vector<R> c;
        c.reserve(a.c_.size());
        for (const R& x : a.c_) c.push_back(-x);
        return TruncSeries(std::move(c));
    }

    /// Cauchy product, truncated to the min of the two caps.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        const std::size_t n = std::min(a.c_.size(), b.c_.size());
        const R zero = zero_like(a.c_[0]);
        std::vector<R> c(n, zero);
        for (std::size_t i = 0; i < n && i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            const std::size_t jmax = std::min(b.c_.size(), n - i);
            for (std::size_t j = 0; j < jmax; ++j) {
                if (is_zero(b.c_[j])) continue;
                c[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return TruncSeries(std::move(c));
    }

    friend TruncSeries operator*(const TruncSeries& a, const R& s) {
        std::vector<R> c;
        c.reserve(a.c_.size());
        for (const R& x : a.c_) c.push_back(x * s);
        return TruncSeries(std::move(c));
    }
    friend TruncSeries operator*(const R& s, const TruncSeries& a) { return a * s; }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) {
        return !(a == b);
    }

    friend std::ostream& operator<<(std::ostream& os, const TruncSeries& s) {
        os << '[';
        for (std::size_t i = 0; i < s.c_.size(); ++i) {
            if (i) os << ", ";
            os << s.c_[i];
        }
        return os << ']';
    }

private:
    static void check_order(int order) {
        if (order < 0) throw Error("series order must be >= 0");
    }

    std::vector<R> c_;
};

template <class R>
bool is_zero(const TruncSeries<R>& s) {
    for (int k = 0; k <= s.order(); ++k)
        if (!is_zero(s.coeff(k))) return false;
    return true;
}

template <class R>
TruncSeries<R> zero_like(const TruncSeries<R>& s) {
    return TruncSeries<R>::zero(s.order(), s.coeff(0));
}

template <class R>
TruncSeries<R> one_like(const TruncSeries<R>& s) {
    return TruncSeries<R>::constant(s.order(), one_like(s.coeff(0)));
}

/// Index of the lowest nonzero coefficient (in the series' own variable), or
/// no_valuation for the zero series.
template <class R>
std::size_t valuation(const TruncSeries<R>& s) {
    for (int k = 0; k <= s.order(); ++k)
        if (!is_zero(s.coeff(k))) return static_cast<std::size_t>(k);
    return no_valuation;
}

/// q-adic valuation. q is always the innermost series variable, so for a
/// QSeries this is the ordinary valuation, while for a polynomial in an
/// auxiliary variable (e.g. w) it is the min over all coefficients.
template <class R>
std::size_t q_valuation(const TruncSeries<R>& s) {
    if constexpr (std::is_same_v<R, Rational>) {
        return valuation(s);
    } else {
        std::size_t best = no_valuation;
        for (int k = 0; k <= s.order(); ++k)
            best = std::min(best, q_valuation(s.coeff(k)));
        return best;
    }
}

/// Multiplicative inverse mod v^{Q+1} via the standard recursion
///   r_0 = 1/c_0,   r_k = -r_0 * sum_{j=1..k} c_j r_{k-j},
/// valid iff the constant term is a unit (throws DivisionByZeroError via the
/// coefficient-ring inverse otherwise).
template <class R>
TruncSeries<R> reciprocal(const TruncSeries<R>& s) {
    const R r0 = inverse(s.coeff(0));
    std::vector<R> r;
    r.reserve(static_cast<std::size_t>(s.order()) + 1);
    r.push_back(r0);
    for (int k = 1; k <= s.order(); ++k) {
        R acc = zero_like(r0);
        for (int j = 1; j <= k; ++j) {
            if (is_zero(s.coeff(j))) continue;
            acc += s.coeff(j) * r[static_cast<std::size_t>(k - j)];
        }
        r.push_back(-(r0 * acc));
    }
    return TruncSeries<R>(std::move(r));
}

/// inverse() for series delegates to reciprocal(), which lets series nest as
/// coefficient rings (a WPoly coefficient is inverted as a q-series).
template <class R>
TruncSeries<R> inverse(const TruncSeries<R>& s) {
    return reciprocal(s);
}

/// Drops the cap to new_order (<= current); coefficients are unchanged.
template <class R>
TruncSeries<R> truncated(const TruncSeries<R>& s, int new_order) {
    if (new_order < 0 || new_order > s.order())
        throw DegreeCapError("cannot truncate order-" + std::to_string(s.order()) +
                             " series to order " + std::to_string(new_order));
    std::vector<R> c;
    c.reserve(static_cast<std::size_t>(new_order) + 1);
    for (int k = 0; k <= new_order; ++k) c.push_back(s.coeff(k));
    return TruncSeries<R>(std::move(c));
}

/// Evaluates prod_{h=1..q_order} factor(h) as an exact stand-in for the
/// corresponding infinite product mod q^{q_order+1}. Sound only when factor(h)
/// deviates from 1 at q-valuation >= h (so factors beyond q_order cannot touch
/// retained coefficients); each factor is checked and a violation throws.
template <class S, class F>
S truncated_infinite_product(F&& factor, int q_order, const S& one) {
    if (q_order < 1) throw Error("truncated infinite product needs q_order >= 1");
    S acc = one;
    for (int h = 1; h <= q_order; ++h) {
        S f = factor(h);
        const std::size_t dev = q_valuation(f - one);
        if (dev != no_valuation && dev < static_cast<std::size_t>(h))
            throw ValuationError("product factor " + std::to_string(h) +
                                 " deviates from 1 at q-order " + std::to_string(dev) +
                                 "; truncation would be inexact");
        acc = acc * f;
    }
    return acc;
}

/// Series in q with rational coefficients, truncated mod q^{Q+1}.
using QSeries = TruncSeries<Rational>;

/// Polynomial in the bookkeeping variable w whose coefficients are QSeries;
/// all coefficients are expected to share one q-order Q.
using WPoly = TruncSeries<QSeries>;

inline QSeries q_zero(int q_order) { return QSeries::zero(q_order, Rational()); }
inline QSeries q_constant(int q_order, const Rational& c) {
    return QSeries::constant(q_order, c);
}
inline QSeries q_monomial(int q_order, int k, const Rational& c = Rational(1)) {
    return QSeries::monomial(q_order, k, c);
}

inline WPoly w_zero(int w_order, int q_order) {
    return WPoly::zero(w_order, q_zero(q_order));
}
inline WPoly w_one(int w_order, int q_order) {
    return WPoly::constant(w_order, q_constant(q_order, Rational(1)));
}
/// The monomial c*w^k as a WPoly.
inline WPoly w_monomial(int w_order, int k, const QSeries& c) {
    return WPoly::monomial(w_order, k, c);
}

} // namespace qrice

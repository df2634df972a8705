#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qrice/errors.hpp"
#include "qrice/rational.hpp"
#include "qrice/ring.hpp"

namespace qrice {

/// (-1)^{i-1}: +1 for odd i, -1 for even i (including i = 0).
constexpr int alt_sign(int i) { return (i % 2 == 0) ? -1 : 1; }

/// q-Pochhammer symbol (a;q)_n = (1-a)(1-aq)...(1-aq^{n-1}); (a;q)_0 = 1.
/// Generic over the coefficient ring, so it serves exact rational points and
/// the truncated-series ring alike.
template <class R>
R q_pochhammer(const R& a, const R& q, int n) {
    if (n < 0) throw Error("q-Pochhammer needs n >= 0");
    const R one = one_like(q);
    R acc = one;
    R aq = a;
    for (int j = 0; j < n; ++j) {
        acc = acc * (one - aq);
        if (j + 1 < n) aq = aq * q;
    }
    return acc;
}

/// Gaussian binomial [n choose k]_q, computed by the q-Pascal recurrence
///   [n k] = [n-1 k-1] + q^k [n-1 k]
/// with row-by-row memoization (no division, no exponential recursion).
/// The quotient-of-Pochhammers definition requires q^i != 1 for i <= n, and
/// the contract stays strict about that even though the polynomial value
/// would exist.
template <class R>
R gaussian_binomial(int n, int k, const R& q) {
    if (n < 0) throw Error("gaussian binomial needs n >= 0");
    const R one = one_like(q);
    if (k < 0 || k > n) return zero_like(q);
    if (k == 0 || k == n) return one;
    {
        R p = q;
        for (int i = 1; i <= n; ++i) {
            if (p == one)
                throw PoleError("gaussian binomial undefined: q is a root of unity (q^" +
                                std::to_string(i) + " = 1)");
            if (i < n) p = p * q;
        }
    }
    std::vector<R> qp;
    qp.reserve(static_cast<std::size_t>(k) + 1);
    qp.push_back(one);
    for (int i = 1; i <= k; ++i) qp.push_back(qp.back() * q);

    std::vector<R> row{one}; // row for n' = 0
    for (int rn = 1; rn <= n; ++rn) {
        const int jmax = std::min(rn, k);
        std::vector<R> next;
        next.reserve(static_cast<std::size_t>(jmax) + 1);
        for (int j = 0; j <= jmax; ++j) {
            if (j == 0 || j == rn) {
                next.push_back(one);
                continue;
            }
            R val = row[static_cast<std::size_t>(j) - 1];
            if (j < static_cast<int>(row.size()))
                val = val + qp[static_cast<std::size_t>(j)] * row[static_cast<std::size_t>(j)];
            next.push_back(std::move(val));
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

/// Rising product (x+1)(x+q)(x+q^2)...(x+q^{i-1}); empty product = 1.
template <class R>
R rising_product(const R& x, const R& q, int i) {
    if (i < 0) throw Error("rising product needs i >= 0");
    R acc = one_like(x);
    R p = one_like(x);
    for (int j = 0; j < i; ++j) {
        acc = acc * (x + p);
        p = p * q;
    }
    return acc;
}

/// The building blocks b_i = q^i/(1-q^i) for i = 1..n (index 0 unused, kept
/// zero so callers can index naturally). Throws via inverse() if q^i = 1.
template <class R>
std::vector<R> geometric_blocks(const R& q, int n) {
    const R one = one_like(q);
    std::vector<R> b;
    b.reserve(static_cast<std::size_t>(n) + 1);
    b.push_back(zero_like(q));
    R p = one;
    for (int i = 1; i <= n; ++i) {
        p = p * q;
        b.push_back(p * inverse(one - p));
    }
    return b;
}

/// The alternating q-Rice sum
///   sum_{i=start..n} [n choose i]_q (-1)^{i-1} q^{binom(i,2)} f(q^{-i})
/// over a black-box f. `start` selects the i=0 (Eq. 2 style) or i=1 (Eq. 1
/// style) convention.
inline Rational alt_q_rice_sum(const std::function<Rational(const Rational&)>& f,
                               int n, const Rational& q, int start) {
    if (start != 0 && start != 1)
        throw Error("alternating q-Rice sum: start must be 0 or 1");
    if (n < start) throw Error("alternating q-Rice sum needs n >= start");
    if (q.is_zero())
        throw PoleError("alternating q-Rice sum evaluates at q^{-i}; q must be nonzero");
    const Rational q_inv = inverse(q);
    Rational sum;
    Rational v = (start == 0) ? Rational(1) : q_inv;
    for (int i = start; i <= n; ++i) {
        const Rational g = gaussian_binomial(n, i, q);
        sum += g * Rational(alt_sign(i)) * q.pow(binom2(i)) * f(v);
        v *= q_inv;
    }
    return sum;
}

} // namespace qrice

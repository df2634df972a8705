#include "qrice/qpoint.hpp"

#include <optional>

#include "qrice/errors.hpp"

namespace qrice {

namespace {

const Rational kOne(1);

/// Returns a description of the first violated admissibility condition.
std::optional<std::string> first_violation(const QPoint& pt, int series_order) {
    if (pt.horizon < 0) return "negative horizon";
    if (pt.q.is_zero()) return "q = 0";
    // q must not be a root of unity of order <= horizon (q^i = 1 makes the
    // Gaussian binomials and 1/(1-q^i) factors blow up).
    Rational p = pt.q;
    for (int i = 1; i <= pt.horizon; ++i) {
        if (p == kOne) return "q^" + std::to_string(i) + " = 1";
        p *= pt.q;
    }
    // t*q^i = 1 is the pole of the Eq.(2) left side and of f(z) = 1/(z-t)
    // at the evaluation points z = q^{-i}.
    Rational tq = pt.t;
    for (int i = 0; i <= pt.horizon; ++i) {
        if (tq == kOne) return "t*q^" + std::to_string(i) + " = 1";
        tq *= pt.q;
    }
    // 1 + x*q^h = 0 would zero a factor that series-mode constructions divide
    // by (the normalizing product over h >= 1).
    Rational xq = pt.x * pt.q;
    for (int h = 1; h <= series_order; ++h) {
        if (xq == -kOne) return "1 + x*q^" + std::to_string(h) + " = 0";
        xq *= pt.q;
    }
    return std::nullopt;
}

} // namespace

bool qpoint_admissible(const QPoint& pt, int series_order) {
    return !first_violation(pt, series_order).has_value();
}

void require_admissible(const QPoint& pt, int series_order) {
    if (auto why = first_violation(pt, series_order))
        throw PoleError("inadmissible evaluation point (" + *why + "): " + to_string(pt));
}

std::string to_string(const QPoint& pt) {
    return "q=" + pt.q.to_string() + " x=" + pt.x.to_string() +
           " t=" + pt.t.to_string();
}

} // namespace qrice

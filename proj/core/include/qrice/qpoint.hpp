#pragma once

#include <string>

#include "qrice/rational.hpp"

namespace qrice {

/// An exact rational evaluation point for the identities. `horizon` is the
/// largest index n the point will be used with: admissibility rules out the
/// poles q^i = 1 and t*q^i = 1 for all 0 <= i <= horizon, and keeps the
/// series-mode substitutions x -> value well-defined by ruling out
/// 1 + x*q^h = 0 up to the active truncation order.
struct QPoint {
    Rational q;
    Rational x;
    Rational t;
    int horizon = 1;
};

/// True iff the point avoids every pole relevant for indices up to
/// `pt.horizon` and series orders up to `series_order`.
bool qpoint_admissible(const QPoint& pt, int series_order);

/// Throws PoleError with a description of the first violated condition.
void require_admissible(const QPoint& pt, int series_order);

/// Compact human-readable rendering, e.g. "q=1/2 x=-1/3 t=2/5".
std::string to_string(const QPoint& pt);

} // namespace qrice

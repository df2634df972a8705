#pragma once

#include "qrice/rational.hpp"

namespace qrice {

/// Square-and-multiply power in any commutative ring that provides the shape
/// helpers one_like/inverse. Negative exponents invert the base first, which
/// throws if the base is not a unit.
template <class R>
R ring_pow(R base, long e) {
    if (e < 0) {
        base = inverse(base);
        e = -e;
    }
    R result = one_like(base);
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

/// i*(i-1)/2, the exponent of q attached to the i-th alternating-sum term.
constexpr long binom2(long i) { return i * (i - 1) / 2; }

} // namespace qrice

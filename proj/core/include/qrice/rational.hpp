#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "qrice/errors.hpp"

namespace qrice {

/// Arbitrary-precision rational number, always held in canonical form:
/// positive denominator, gcd(|numerator|, denominator) = 1, and zero stored
/// as 0/1. Every operation is exact; division by zero throws.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}   // NOLINT: integers embed implicitly
    Rational(long n) : v_(static_cast<signed long>(n)) {} // NOLINT
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);

    /// Parses "num/den" or a bare integer "num" (base 10, optional sign).
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Integer power; negative exponents invert first (zero base throws).
    Rational pow(long e) const;

    /// Canonical decimal rendering "num/den", e.g. "5/1", "-3/10".
    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    mpq_class v_;
};

inline Rational zero_like(const Rational&) { return Rational(); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline Rational inverse(const Rational& r) {
    if (r.is_zero()) throw DivisionByZeroError("inverse of zero rational");
    return Rational(1) / r;
}

inline Rational pow(const Rational& base, long e) { return base.pow(e); }

/// q-adic valuation of a scalar: 0 for nonzero values. Zero has no finite
/// valuation, reported as npos; the series overload refines this.
inline std::size_t q_valuation(const Rational& r) {
    return r.is_zero() ? static_cast<std::size_t>(-1) : 0;
}

} // namespace qrice

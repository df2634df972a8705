#include "qrice/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qrice {

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty())
        throw Error("malformed rational \"" + std::string(whole) + "\": empty component");
    std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (i == text.size())
        throw Error("malformed rational \"" + std::string(whole) + "\": sign without digits");
    for (; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw Error("malformed rational \"" + std::string(whole) + "\": unexpected character");
    // mpz_set_str accepts a leading '-' but not a leading '+'
    return mpz_class(std::string(text[0] == '+' ? text.substr(1) : text), 10);
}

} // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    v_ = mpq_class(static_cast<signed long>(num), 1);
    v_ /= mpq_class(static_cast<signed long>(den), 1);
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw DivisionByZeroError("rational with zero denominator");
    v_ = mpq_class(num);
    v_ /= mpq_class(den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZeroError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    unsigned long ue = invert ? static_cast<unsigned long>(-(e + 1)) + 1UL
                              : static_cast<unsigned long>(e);
    if (invert && is_zero()) throw DivisionByZeroError("zero raised to a negative power");
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), ue);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), ue);
    // num/den stays coprime because the base was canonical.
    Rational r;
    r.v_ = invert ? mpq_class(den, num) : mpq_class(num, den);
    r.v_.canonicalize(); // only normalizes the sign when inverted
    return r;
}

std::string Rational::to_string() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::parse(std::string_view text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        Rational r;
        r.v_ = mpq_class(parse_integer(text, text));
        return r;
    }
    const mpz_class num = parse_integer(text.substr(0, slash), text);
    const mpz_class den = parse_integer(text.substr(slash + 1), text);
    if (sgn(den) == 0)
        throw DivisionByZeroError("malformed rational \"" + std::string(text) +
                                  "\": zero denominator");
    return Rational(num, den);
}

} // namespace qrice

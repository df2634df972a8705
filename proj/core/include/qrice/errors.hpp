#pragma once

#include <stdexcept>
#include <string>

namespace qrice {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// Division by an exact zero: a zero rational, or inversion of a series whose
/// constant term is zero.
class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

/// An evaluation point violates a pole-avoidance precondition, e.g. q a root
/// of unity of relevant order, t = q^{-i}, or f evaluated at its own pole.
class PoleError : public Error {
public:
    using Error::Error;
};

/// A factor supplied to a truncated infinite product does not deviate from 1
/// at high enough q-order, so truncating the product would lose information.
class ValuationError : public Error {
public:
    using Error::Error;
};

/// Coefficient access beyond the degree cap of a truncated series/polynomial.
class DegreeCapError : public Error {
public:
    using Error::Error;
};

/// Pole-avoiding rejection sampling exhausted its retry budget.
class SamplingError : public Error {
public:
    using Error::Error;
};

} // namespace qrice

#pragma once

#include <stdexcept>
#include <string>

namespace ordh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t expected, std::size_t got)
        : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
                std::to_string(got)) {}
};

/// The order's positive cone has no least element (raised for functional orders).
class NoMinimalPositive : public Error {
public:
    NoMinimalPositive() : Error("order has no minimal positive element") {}
};

/// An index lies in the wrong half of the dual group for the requested operation.
class ConeViolation : public Error {
public:
    using Error::Error;
};

/// Hankel operators act on analytic-type polynomials only.
class NotAnalytic : public Error {
public:
    NotAnalytic() : Error("argument is not of analytic type (has coefficients on the negative cone)") {}
};

class NoConvergence : public Error {
public:
    NoConvergence(double last_value, double gap, int iterations)
        : Error("power iteration did not converge after " + std::to_string(iterations) +
                " iterations (last=" + std::to_string(last_value) + ", gap=" + std::to_string(gap) + ")"),
          last_value(last_value), gap(gap), iterations(iterations) {}

    double last_value;
    double gap;
    int iterations;
};

class NumericalError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

} // namespace ordh

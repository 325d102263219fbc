#pragma once

#include <stdexcept>
#include <string>

namespace isoperim {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid geometric input (violated construction invariant).
class InvalidDomainError : public Error {
public:
    using Error::Error;
};

// Operation called outside its stated precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Exponent outside the finiteness range (p <= -1 on the boundary, q <= -2, ...).
class DivergenceError : public Error {
public:
    using Error::Error;
};

// Parameter outside the documented range of an operation.
class RangeError : public Error {
public:
    using Error::Error;
};

// Iterative scheme failed to reach its tolerance; carries the last residual.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double residual)
        : Error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_ = 0.0;
};

// Series/Fourier truncation could not represent the data; carries the measured residual.
class TruncationError : public Error {
public:
    TruncationError(const std::string& what, double residual)
        : Error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_ = 0.0;
};

// Map degenerated (vanishing G, winding Q, ...).
class DegeneracyError : public Error {
public:
    using Error::Error;
};

// Hypotheses of a theorem-backed bound are not met for the requested parameters.
class HypothesisError : public Error {
public:
    using Error::Error;
};

// A search failed to locate the requested feature within its budget.
class NotFoundError : public Error {
public:
    using Error::Error;
};

} // namespace isoperim

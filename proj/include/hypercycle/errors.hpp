#pragma once

#include <stdexcept>
#include <string>

namespace hypercycle {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A caller passed values outside an operation's documented domain.
class ParameterError : public Error {
public:
    using Error::Error;
};

// Matrix shape mismatch (non-square input, incompatible product, ...).
class DimensionError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

// Trace order outside the range the closed forms cover (d > l).
class UnsupportedOrderError : public Error {
public:
    using Error::Error;
};

// Work estimate exceeds the configured budget / expansion cap.
class FeasibilityError : public Error {
public:
    FeasibilityError(const std::string& msg, std::string estimate)
        : Error(msg), estimate_(std::move(estimate)) {}
    // Decimal string of the estimated cost that tripped the guard.
    const std::string& estimate() const { return estimate_; }

private:
    std::string estimate_;
};

// An internal consistency assertion failed (e.g. a value that must be a
// nonnegative integer came out otherwise). Always indicates a bug, not data.
class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace hypercycle

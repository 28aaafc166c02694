#pragma once

#include <stdexcept>
#include <string>

namespace gtdlab {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid parameters (violated validity region, bad family, ...). CLI exit code 2.
class ParameterError : public Error {
public:
    using Error::Error;
};

// Argument outside the mathematical domain of an operation. CLI exit code 2.
class DomainError : public Error {
public:
    using Error::Error;
};

// Wrong family branch requested; the message names the right one. CLI exit code 2.
class DispatchError : public ParameterError {
public:
    using ParameterError::ParameterError;
};

// Numerical failure: non-convergence, consistency alarm, divergent quadrature
// where a finite value is required. CLI exit code 3.
class NumericError : public Error {
public:
    using Error::Error;
};

// MaxEnt reconstruction has no feasible solution. CLI exit code 4.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

} // namespace gtdlab

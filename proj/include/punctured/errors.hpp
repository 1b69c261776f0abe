#ifndef PUNCTURED_ERRORS_HPP
#define PUNCTURED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace punctured
{

// Base of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the domain of an operation (invalid parameters, radius
// beyond a validity bound, non-finite input, ...).
class DomainError : public Error
{
public:
    using Error::Error;
};

// Gamma function evaluated at 0, -1, -2, ...
class PoleError : public DomainError
{
public:
    using DomainError::DomainError;
};

// 2F1 requested at z = 1 where it diverges (c - a - b <= 0).
class BranchPointError : public DomainError
{
public:
    using DomainError::DomainError;
};

// Metric density requested at a puncture of the domain.
class PunctureError : public DomainError
{
public:
    using DomainError::DomainError;
};

// A series or iteration failed to meet its truncation criterion.
class NonConvergenceError : public Error
{
public:
    using Error::Error;
};

// Integration path for the hypergeometric equation hits a singular point or
// crosses the branch cut [1, +inf).
class PathError : public DomainError
{
public:
    using DomainError::DomainError;
};

// Adaptive step size collapsed below the representable resolution.
class StepSizeError : public NonConvergenceError
{
public:
    using NonConvergenceError::NonConvergenceError;
};

// Bracketing of a one-dimensional minimum failed.
class OptimizationError : public Error
{
public:
    using Error::Error;
};

} // namespace punctured

#endif

#pragma once

#include <stdexcept>
#include <string>

namespace mlfrac {

/// Argument outside the real positive domain an operation is defined on.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Caller violated an operation's precondition (e.g. a reduction selected
/// with parameters that do not satisfy it).
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A Fox-Wright parameter set fails 1 + sum(B) - sum(A) >= 0.
class ConvergenceConditionError : public std::invalid_argument {
public:
    ConvergenceConditionError(const std::string& what, double sum_upper, double sum_lower)
        : std::invalid_argument(what), sum_upper_(sum_upper), sum_lower_(sum_lower) {}

    double sum_upper() const noexcept { return sum_upper_; }
    double sum_lower() const noexcept { return sum_lower_; }

private:
    double sum_upper_;
    double sum_lower_;
};

/// Numerical quadrature did not reach its tolerance or hit a non-finite sample.
class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mlfrac

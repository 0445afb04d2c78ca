#pragma once

#include <stdexcept>
#include <string>

namespace grover {

/// Bad input: configuration, file contents or arguments. The CLI maps these to exit code 2.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Amplitudes whose total probability is outside the accepted tolerance.
class NormViolation : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Malformed state or config document.
class ParseError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A closed-form result that only exists for a real ratio k_bar(0)/l_bar(0),
/// or for a non-zero l_bar(0).
class NotApplicable : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The closed-form planner cannot be used; fall back to the numeric scan.
class FallbackRequired : public NotApplicable {
public:
    using NotApplicable::NotApplicable;
};

/// Requested per-state data from a solution built from summary statistics only.
class UnsupportedOperation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A numerical invariant failed (norm drift, probability outside [0, 1], ...).
class InvariantViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace grover

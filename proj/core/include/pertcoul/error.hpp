#pragma once

#include <stdexcept>
#include <string>

namespace pertcoul {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside the domain of an operation (bad dimension, negative mass, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The potential parameters are off the surface on which a closed form exists.
/// `violation()` is |b - b*| where b* is the value the constraint demands.
class ConstraintViolation : public Error {
public:
    ConstraintViolation(const std::string& what, double violation)
        : Error(what), violation_(violation) {}

    double violation() const noexcept { return violation_; }

private:
    double violation_;
};

} // namespace pertcoul

#pragma once

#include <stdexcept>

namespace negtype {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data: bad matrices, bad documents, bad plans.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A parameter lies outside an operation's domain (c <= 0, gap <= 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The hypotheses of a lower bound cannot be met (e.g. equilateral space).
class BoundInapplicableError : public DomainError {
public:
    using DomainError::DomainError;
};

} // namespace negtype

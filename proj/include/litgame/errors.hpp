#pragma once

#include <stdexcept>
#include <string>

namespace litgame {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A number that should be a probability is outside [0, 1] or not finite.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Errors that follow from the model itself rather than from bad input syntax.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Conditioning on an outcome that has probability zero.
class UndefinedPosterior : public DomainError {
public:
    using DomainError::DomainError;
};

/// No prior in (0, 1) reaches the requested posterior.
class UnreachableTarget : public DomainError {
public:
    using DomainError::DomainError;
};

/// A simulation drew no positive verdicts, so nothing can be said about PPV.
class NoPositives : public DomainError {
public:
    using DomainError::DomainError;
};

class GridTooLarge : public DomainError {
public:
    using DomainError::DomainError;
};

/// A file could not be read or written.
class IoError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed scenario document or grid syntax.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A scenario document mixes catalog tags with numeric overrides.
class AmbiguousScenario : public ParseError {
public:
    using ParseError::ParseError;
};

/// An internal consistency check failed. Always a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace litgame

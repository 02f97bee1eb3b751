#pragma once

#include <stdexcept>
#include <string>

namespace jetlaw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A total derivative, substitution or reduction pushed a jet coordinate
/// past the configured maximum order.
class JetOrderExceeded : public Error {
public:
    explicit JetOrderExceeded(const std::string& what) : Error(what) {}
};

/// A mathematical precondition of an operation does not hold
/// (non-solvable leading derivative, Lagrangian of too high order, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// The coefficient of u_t cannot determine the multiplier lambda.
class InconsistentMultiplier : public Error {
public:
    explicit InconsistentMultiplier(const std::string& what) : Error(what) {}
};

/// A constraint on phi does not match any of the shapes the solver handles.
/// Reported, not fatal: classification becomes Undetermined.
class UnsupportedConstraintShape : public Error {
public:
    explicit UnsupportedConstraintShape(const std::string& what) : Error(what) {}
};

/// split_by_constants was asked to split a vector that is not linear in
/// the given constants.
class NotLinearInConstants : public Error {
public:
    explicit NotLinearInConstants(const std::string& what) : Error(what) {}
};

/// A conservation-law verification left a nonzero residual.
class VerificationFailed : public Error {
public:
    explicit VerificationFailed(const std::string& what) : Error(what) {}
};

/// Expression or config text could not be parsed.  `position` is a byte
/// offset into the source text; `line`/`column` are 1-based when known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position, int line = 0, int column = 0)
        : Error(what), position(position), line(line), column(column) {}
    std::size_t position;
    int line;
    int column;
};

/// An identifier in an expression is not a known variable, jet,
/// parameter or constant.
class UnknownIdentifier : public ParseError {
public:
    UnknownIdentifier(const std::string& what, std::size_t position, int line = 0, int column = 0)
        : ParseError(what, position, line, column) {}
};

/// Bad key, missing section or malformed value in a config file.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

/// A simulation produced a non-finite sample.
class BlowupDetected : public Error {
public:
    explicit BlowupDetected(const std::string& what) : Error(what) {}
};

/// A simulation exceeded the configured amplitude bound.
class StabilityViolated : public Error {
public:
    explicit StabilityViolated(const std::string& what) : Error(what) {}
};

} // namespace jetlaw

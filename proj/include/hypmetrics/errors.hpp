#pragma once

#include <stdexcept>
#include <string>

namespace hypmetrics {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two points (or a point and a domain) disagree on dimension.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A point lies outside (or on the boundary of) the domain it is used in.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The angle at the origin is undefined because an argument is the zero vector.
class UndefinedAngleError : public Error {
public:
    using Error::Error;
};

/// A root bracket has no sign change.
class BracketError : public Error {
public:
    using Error::Error;
};

/// An iterative solve exceeded its iteration budget.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// A numeric kernel met a non-finite value.
class NumericsError : public Error {
public:
    using Error::Error;
};

/// A configuration value violates its documented constraints.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A map was evaluated at its pole.
class PoleError : public Error {
public:
    using Error::Error;
};

} // namespace hypmetrics

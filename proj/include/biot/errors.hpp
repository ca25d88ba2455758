#pragma once

#include <stdexcept>
#include <string>

namespace biot {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration or user input (CLI exit code 2).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Game parameters make an operation mathematically undefined,
/// e.g. an attacker type with B_a + C_d = 0 has no unique indifference point.
class DegenerateParametersError : public Error {
public:
    using Error::Error;
};

/// Bayes posterior requested for a signal with zero total probability.
class UndefinedPosteriorError : public Error {
public:
    using Error::Error;
};

/// Internal consistency violation, e.g. the equilibrium solver returning
/// an empty or uncertified result (CLI exit code 3).
class InternalError : public Error {
public:
    using Error::Error;
};

/// Filesystem failure, reported with the offending path (CLI exit code 4).
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace biot

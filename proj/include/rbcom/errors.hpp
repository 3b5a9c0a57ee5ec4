#pragma once

#include <stdexcept>
#include <string>

namespace rbcom {

// Invalid parameter set or argument outside a documented precondition.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Exponential (or similar) evaluation would overflow double range.
class OverflowError : public std::range_error {
public:
    explicit OverflowError(const std::string& msg) : std::range_error(msg) {}
};

// Iterative solver failed to converge to the requested tolerance.
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent configuration input.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Analysis cannot produce a meaningful result (e.g. no passband on the grid).
class AnalysisError : public std::runtime_error {
public:
    explicit AnalysisError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rbcom

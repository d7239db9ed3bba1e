#pragma once

#include <stdexcept>
#include <string>

namespace axstring {

/// Input outside the domain of a mathematical operation (ill-posed speed,
/// point outside the moving interval, invalid initial data).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A numerical kernel produced or consumed a non-finite value.
class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed configuration document or table.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Solver parameters that make a discretisation unusable.
class SolverConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace axstring

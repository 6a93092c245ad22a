#pragma once

#include <stdexcept>
#include <string>

namespace kmlab {

/// Bad user-supplied configuration or contract violation (CLI exit code 2).
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Parameters are structurally infeasible, e.g. a construction cannot meet
/// its own side conditions at the requested size (CLI exit code 3).
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A computation would exceed its declared state budget (CLI exit code 4).
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace kmlab

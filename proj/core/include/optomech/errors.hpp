#pragma once

#include <stdexcept>
#include <string>

namespace optomech {

// Non-physical or malformed user input; the message names the offending field.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A computation was requested on an unstable operating point.
class InstabilityError : public std::runtime_error {
public:
    InstabilityError(const std::string& msg, double max_re_eigenvalue)
        : std::runtime_error(msg), max_re_eigenvalue(max_re_eigenvalue) {}
    double max_re_eigenvalue;
};

// An iterative or adaptive scheme did not reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& msg, double achieved)
        : std::runtime_error(msg), achieved_tolerance(achieved) {}
    double achieved_tolerance;
};

// A state or quantity violates a quantum-mechanical constraint beyond tolerance.
class PhysicalityError : public std::runtime_error {
public:
    explicit PhysicalityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Two redundant internal routes disagree beyond tolerance.
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed sweep/CLI configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace optomech

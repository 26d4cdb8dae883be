#pragma once

#include <stdexcept>
#include <string>

namespace freezing {

/// Raised when an argument lies outside the domain of an operation
/// (e.g. alpha <= -1, a < 0, a non-positive Pochhammer base).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when an iterative routine exhausts its iteration budget.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised for mismatched dimensions or inconsistent inputs.
class ShapeError : public std::invalid_argument {
public:
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace freezing

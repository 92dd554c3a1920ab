#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace xxnet {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument or violated precondition.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Field lies on (or within tolerance of) a ground-state level crossing,
/// where the ground state is degenerate and the sector is ambiguous.
class DegenerateFieldError : public Error {
public:
    using Error::Error;
};

/// Requested computation exceeds a configured size cap.
class SizeCapError : public Error {
public:
    using Error::Error;
};

/// Iterative procedure failed to converge within its sweep budget.
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& what, std::vector<int> oscillating = {})
        : Error(what), oscillating_nodes(std::move(oscillating)) {}
    std::vector<int> oscillating_nodes;
};

/// Lowest eigenvalue is degenerate within tolerance.
class DegeneracyError : public Error {
public:
    using Error::Error;
};

}  // namespace xxnet

#pragma once

#include <stdexcept>
#include <string>

namespace balloon {

// Bad caller-supplied combination (length mismatch, invalid permutation, ...).
struct InvalidArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Instance cannot be processed at all (e.g. zero total wedge size).
struct DegenerateInstanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exhaustive enumeration would exceed the configured budget.
struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exact solver was requested for a case where none exists at this size.
struct SolverRefusalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input document could not be parsed; line/column are 1-based, 0 if unknown.
struct ParseError : std::runtime_error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& what, int line_ = 0, int column_ = 0)
        : std::runtime_error(what), line(line_), column(column_) {}
};

}  // namespace balloon

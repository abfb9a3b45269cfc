#pragma once

#include <stdexcept>
#include <string>

namespace clab {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed instance files, bad rationals, unknown names.
struct ParseError : Error {
    using Error::Error;
};

// A construction invariant does not hold (non-total map, bad coefficients, ...).
struct InvariantError : Error {
    using Error::Error;
};

// An orbit did not become periodic within the step budget.
struct BudgetError : Error {
    using Error::Error;
};

// A value outside an operation's domain (negative phi argument, bad index, ...).
struct DomainError : Error {
    using Error::Error;
};

} // namespace clab

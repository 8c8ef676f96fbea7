#pragma once

#include <stdexcept>
#include <string>

namespace jacksf {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Division by the zero element of a coefficient field.
struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
    explicit division_by_zero(const std::string& what) : error(what) {}
};

// Evaluation of a rational function at a point where its denominator vanishes.
struct pole_error : error {
    explicit pole_error(const std::string& what) : error(what) {}
};

// A caller violated a documented precondition (bad index, malformed input, ...).
struct argument_error : error {
    explicit argument_error(const std::string& what) : error(what) {}
};

// An internal consistency check failed (e.g. a division that must be exact
// left a remainder).  Indicates a bug, not bad input.
struct internal_error : error {
    explicit internal_error(const std::string& what) : error(what) {}
};

} // namespace jacksf

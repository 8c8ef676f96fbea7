#pragma once

#include <gmpxx.h>

#include <string>

#include "jacksf/errors.hpp"

namespace jacksf {

// Exact arbitrary-precision arithmetic, provided by GMP.  Rat is always kept
// in canonical form (reduced, positive denominator).
using Int = mpz_class;
using Rat = mpq_class;

// Parses "p" or "p/q" with optional sign.  Throws argument_error on malformed
// input or zero denominator.
Rat rat_from_string(const std::string& text);

// Renders as "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& value);

Int factorial(unsigned n);

} // namespace jacksf

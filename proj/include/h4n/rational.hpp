#pragma once

#include <gmpxx.h>

#include <string>

namespace h4n {

/// Exact rational scalar. GMP keeps the canonical form invariant
/// (gcd(|num|, den) = 1, den > 0) through every arithmetic operation.
using Rat = mpq_class;

/// Parse "p" or "p/q" into a canonical rational. Throws std::invalid_argument
/// on malformed input or zero denominator.
Rat rat_parse(const std::string& text);

/// Canonical rendering: "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const Rat& r);

}  // namespace h4n

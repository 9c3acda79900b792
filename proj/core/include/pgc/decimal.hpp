#pragma once

#include <string>
#include <string_view>

#include "pgc/rational.hpp"

namespace pgc {

// Parses a signed decimal literal with optional fractional part and
// power-of-ten exponent ("0.6263716633", "2.1701388889e-11", "-3.25")
// into the exact rational it denotes. Never rounds.
// Throws ParseError naming the offending character position.
Rational parse_decimal(std::string_view text);

// Renders r with exactly `frac_digits` digits after the decimal point.
// Exact: throws DomainError if r * 10^frac_digits is not an integer.
std::string to_decimal_string(const Rational& r, unsigned frac_digits);

// Largest grid point below-or-equal / smallest above-or-equal on the
// 10^-digits grid.
Rational decimal_floor(const Rational& r, unsigned digits);
Rational decimal_ceil(const Rational& r, unsigned digits);

}  // namespace pgc

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace jetlaw {

/// Exact rational scalar with arbitrary precision.  Identities in the jet
/// ring must hold exactly; "coefficient == 0" is decidable only with exact
/// arithmetic.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Renders "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& r);

/// Parses "p" or "p/q" (optional leading sign).  Returns nullopt on
/// malformed input or zero denominator.
std::optional<Rational> rational_from_string(const std::string& text);

/// True when r is an integer that fits an int64.
bool fits_int64(const Rational& r);

} // namespace jetlaw

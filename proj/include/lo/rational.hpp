#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace lo {

using Integer = boost::multiprecision::mpz_int;

// Exact arbitrary-precision rational, always kept in lowest terms with a
// positive denominator (GMP canonical form).
using Rational = boost::multiprecision::mpq_rational;

// Parses "p", "-p", or "p/q". Throws ParseError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

// Renders "p" when the denominator is 1, "p/q" otherwise. Never a float.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

} // namespace lo

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "cds/errors.hpp"

namespace cds {

// All costs, ratios and bound coefficients are exact rationals. Arbitrary
// precision keeps every comparison exact; cross-multiplication can never
// overflow or round.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical "num/den" form with den > 0, always including the denominator.
std::string format_rational(const Rational& r);

// Accepts "num/den", a plain integer, or a decimal like "0.25" (parsed
// exactly). Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

} // namespace cds

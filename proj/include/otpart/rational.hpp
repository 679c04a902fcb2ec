#pragma once

#include <boost/rational.hpp>
#include <string>

namespace otpart {

/// Exact rational arithmetic for atom masses and grid-exact costs.
/// Desk-scale inputs keep numerators/denominators tiny, so a 64-bit
/// backing type is plenty.
using Rational = boost::rational<long long>;

/// Canonical text form: "p" when the denominator is 1, else "p/q"
/// in lowest terms. Round-trips exactly through parse_rational.
std::string to_string(const Rational& r);

/// Accepts "p" and "p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(const std::string& s);

}  // namespace otpart

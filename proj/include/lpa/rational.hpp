#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "lpa/errors.hpp"

namespace lpa {

// Exact coefficient field: the rationals with the identity involution.
using Rational = boost::multiprecision::cpp_rational;

// Parses "a" or "a/b" with optional leading '-'. Throws invalid_polynomial
// on anything else (including a zero denominator).
Rational parse_rational(std::string_view text);

// Canonical form: "a" for integers, "a/b" otherwise, b > 0.
std::string to_string(const Rational& r);

}  // namespace lpa

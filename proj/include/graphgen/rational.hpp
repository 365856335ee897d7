#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace graphgen {

// Arbitrary-precision fraction, always stored reduced with a positive
// denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Always "p/q", including "1/1" for integers.
std::string format_rational(const Rational& r);

// Accepts "p/q" or "p" (optional leading '-'). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Rational inverse(const Integer& value);

}  // namespace graphgen

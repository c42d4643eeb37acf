#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mcf {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// num/den for any nonzero den (the two-argument Rational constructor
/// rejects negative denominators). Throws ZeroDenominator when den == 0.
Rational ratio(const Integer& num, const Integer& den);

/// Floor toward negative infinity.
Integer floor_of(const Rational& value);

/// Fractional part in [0, 1).
Rational fractional_part(const Rational& value);

/// Parses an optionally signed decimal integer. Throws mcf::Error.
Integer parse_integer(std::string_view text);

/// Parses "p", "p/q" or a finite decimal such as "-1.25". Throws mcf::Error.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Checked conversion for quantities that must fit a machine word
/// (stack heights during enumeration, indices).
long long to_int64(const Integer& value);

}  // namespace mcf

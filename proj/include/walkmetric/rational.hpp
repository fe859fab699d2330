#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>

namespace walkmetric {

// All metric, pairing and proximity values are exact rationals; floating
// point appears only when rendering decimals.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Accepts "p/q", plain integers, and finite decimal strings ("0.25", "-1.5"),
// all parsed exactly. Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

// r^n for n >= 0 (r^0 == 1).
Rational rational_pow(const Rational& r, std::size_t n);

// "p/q", or just "p" when the denominator is one.
std::string fraction_string(const Rational& r);

// Fixed-point decimal with `decimals` digits, rounding half to even.
std::string decimal_string(const Rational& r, unsigned decimals);

}  // namespace walkmetric

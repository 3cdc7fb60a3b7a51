#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace votemap {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Scalar conversions used by the templated matrix code.
inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

// Exact rational from a decimal literal such as "0.37", "-1.5e-2" or "3/8".
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& x);

}  // namespace votemap

#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace kroncave {

// Arbitrary-precision signed integer used for every coefficient, character
// sum and class size. Small values are stored inline, so there is no heap
// traffic for the common case.
using ExactInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const ExactInt& v) { return v.str(); }

// Throws std::invalid_argument on anything that is not an optionally signed
// run of decimal digits.
ExactInt parse_decimal(const std::string& text);

ExactInt factorial(int n);

}  // namespace kroncave

#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace realcover {

// Expression templates off: values are small and plain temporaries keep
// ternaries and std::min/max usable.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

/// Exact "p/q" text form (denominator always written).
std::string to_string(const Rational& q);

/// Accepts "p/q" or "p". Throws std::invalid_argument otherwise.
Rational rational_from_string(const std::string& text);

BigInt floor(const Rational& q);

/// Representative of q mod 1 in [0, 1).
Rational frac(const Rational& q);

}  // namespace realcover

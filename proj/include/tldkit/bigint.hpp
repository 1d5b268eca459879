#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tldkit {

using BigInt = boost::multiprecision::cpp_int;

// Reduced fraction with positive denominator; used for evaluating
// polynomials at concrete parameter values.
using Rational = boost::multiprecision::cpp_rational;

// binomial(n, k) with the convention that out-of-range k gives 0.
BigInt binomial(long n, long k);

// Accepts "a" or "a/b" with optional leading '-'; throws InvalidArguments
// on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// Emits "a" or "a/b" (denominator omitted when 1).
std::string format_rational(const Rational& value);

} // namespace tldkit

#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace wreath {

using Integer = boost::multiprecision::cpp_int;

// Exact scalars. cpp_rational keeps the canonical form we rely on
// everywhere: lowest terms, positive denominator, zero stored as 0/1.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p" or "p/q" with decimal integers. Throws Error on anything else,
/// including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string rational_str(const Rational& value);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

} // namespace wreath

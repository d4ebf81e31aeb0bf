#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace ainfty {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "3", "-7", "0.25", "-1.5", "22/7". Throws ParseError on anything else.
Rational parse_rational(const std::string& s);
std::optional<Rational> try_parse_rational(const std::string& s);

// Exact text form: a terminating decimal when the reduced denominator is
// 2^a·5^b ("0.25", "-3", "1.2"), otherwise "num/den".
std::string format_rational(const Rational& q);

double rational_to_double(const Rational& q);

int sign_of(const Rational& q);

// Floor of sqrt(n) for n >= 0.
Int isqrt_floor(const Int& n);

// True iff q >= 0 is the square of a rational; optionally returns the
// nonnegative root.
bool is_perfect_square(const Rational& q, Rational* root = nullptr);

}  // namespace ainfty

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "errors.hpp"

namespace mmc {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

// C(n, k) with C(n, k) = 0 for k < 0 or k > n.
Int binomial(long long n, long long k);

Int pow2(long long e);

// Floor/ceil of a rational as an exact integer.
Int rat_floor(const Rational& q);
Int rat_ceil(const Rational& q);

// Canonical fraction string: "p" when the denominator is 1, else "p/q".
std::string to_fraction(const Rational& q);

// Inverse of to_fraction. Accepts "p" and "p/q"; throws ParseError otherwise.
Rational parse_fraction(const std::string& text);

// Exact square root when q is a perfect square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

double to_double(const Rational& q);

} // namespace mmc

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace psval {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long n, long long d = 1) { return Rational(n, d); }

/// Exact integer square root if n is a perfect square.
std::optional<BigInt> exact_isqrt(const BigInt& n);

/// Exact rational square root if q is a square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& s);

} // namespace psval

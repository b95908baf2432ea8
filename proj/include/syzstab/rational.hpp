#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace syzstab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. The backend keeps values in lowest terms with a
/// positive denominator, so comparisons and equality are exact.
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

/// "p" when integral, "p/q" otherwise.
std::string rational_to_string(const Rational& x);

/// Parses "p" or "p/q", optional leading '-'. Throws std::invalid_argument
/// on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

/// Largest integer <= x.
BigInt floor_rational(const Rational& x);

BigInt binomial(long long n, long long k);

}  // namespace syzstab

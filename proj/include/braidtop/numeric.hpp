#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace braidtop {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals, never floating point.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parse a rational written as `p`, `-p`, or `p/q` with q > 0.
/// Throws std::invalid_argument on anything else (including q <= 0).
Rational parse_rational(std::string_view text);

/// Canonical form: `p` or `p/q` with q > 0 and gcd(p,q) = 1.
std::string rational_str(const Rational& r);

inline bool is_even(const Int& v) { return (v & 1) == 0; }

}  // namespace braidtop

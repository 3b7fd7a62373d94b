#pragma once

#include "braidtop/numeric.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace braidtop {

/// Element of Q(i): exact complex number with rational real and imaginary
/// parts.  Used wherever the constructions call for points of C* or C^n so
/// that invertibility and equality are decidable, with no tolerances.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r) {}

  bool is_zero() const { return re == 0 && im == 0; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

  GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
  GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }

  /// z^e for integer e (negative e requires z != 0).
  GaussianRational pow(long e) const;
};

/// Parse `p/q`, `p/q+r/si`, `p/q-r/si`, or a pure-imaginary `r/si`
/// (each part an integer or a fraction).  Examples: `1`, `-1`, `1/2+3/4i`, `2i`.
GaussianRational parse_gaussian(std::string_view text);

/// Inverse of rational_str-style printing: `1/2+3/4i`, `-2i`, `5`.
std::string gaussian_str(const GaussianRational& z);

/// Parse a comma-separated list of Gaussian rationals.
std::vector<GaussianRational> parse_gaussian_list(std::string_view text);

}  // namespace braidtop

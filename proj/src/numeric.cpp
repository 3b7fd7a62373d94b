#include "braidtop/numeric.hpp"

#include <cctype>

namespace braidtop {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  if (!all_digits(num))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  Int p{std::string(num)};
  Int q = 1;
  if (slash != std::string_view::npos) {
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(den))
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    q = Int{std::string(den)};
    if (q <= 0)
      throw std::invalid_argument("malformed rational '" + std::string(text) +
                                  "': denominator must be positive");
  }
  if (negative) p = -p;
  return Rational(p, q);
}

std::string rational_str(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace braidtop

#include "braidtop/gaussian.hpp"

#include <stdexcept>

namespace braidtop {

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero Gaussian rational");
  Rational n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

GaussianRational GaussianRational::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw std::domain_error("negative power of zero");
    return (GaussianRational(Rational(1)) / *this).pow(-e);
  }
  GaussianRational acc{Rational(1)};
  GaussianRational base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

GaussianRational parse_gaussian(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty Gaussian rational");
  // Split at a '+'/'-' that is not the leading sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = 1; k < text.size(); ++k) {
    if (text[k] == '+' || text[k] == '-') {
      split = k;
      break;
    }
  }
  auto parse_part = [&](std::string_view part, bool expect_i) -> Rational {
    if (expect_i) {
      if (part.empty() || part.back() != 'i')
        throw std::invalid_argument("malformed Gaussian rational '" + std::string(text) + "'");
      part.remove_suffix(1);
      if (part.empty() || part == "+" || part == "-")
        return part == "-" ? Rational(-1) : Rational(1);
    }
    return parse_rational(part);
  };
  if (split == std::string_view::npos) {
    if (text.back() == 'i') return {Rational(0), parse_part(text, true)};
    return {parse_rational(text), Rational(0)};
  }
  std::string_view re_part = text.substr(0, split);
  bool im_negative = text[split] == '-';
  std::string_view im_part = text.substr(split + 1);
  if (im_part.empty() || im_part.back() != 'i')
    throw std::invalid_argument("malformed Gaussian rational '" + std::string(text) + "'");
  Rational im = parse_part(im_part, true);
  return {parse_rational(re_part), im_negative ? -im : im};
}

std::string gaussian_str(const GaussianRational& z) {
  if (z.im == 0) return rational_str(z.re);
  std::string im = rational_str(z.im) + "i";
  if (z.re == 0) return im;
  if (z.im > 0) return rational_str(z.re) + "+" + im;
  return rational_str(z.re) + im;  // the '-' comes with the imaginary part
}

std::vector<GaussianRational> parse_gaussian_list(std::string_view text) {
  std::vector<GaussianRational> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    out.push_back(parse_gaussian(item));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace braidtop

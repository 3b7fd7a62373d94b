#include "braidtop/burau.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace braidtop::burau {

namespace {

void prune(LaurentPoly& p) {
  for (auto it = p.coeffs.begin(); it != p.coeffs.end();)
    it = (it->second == 0) ? p.coeffs.erase(it) : std::next(it);
}

}  // namespace

LaurentPoly lp_const(Int c) { return lp_t(0, std::move(c)); }

LaurentPoly lp_t(long exponent, Int coeff) {
  LaurentPoly p;
  if (coeff != 0) p.coeffs[exponent] = std::move(coeff);
  return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  for (const auto& [e, c] : b.coeffs) out.coeffs[e] += c;
  prune(out);
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  for (const auto& [e, c] : b.coeffs) out.coeffs[e] -= c;
  prune(out);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.coeffs)
    for (const auto& [eb, cb] : b.coeffs) out.coeffs[ea + eb] += ca * cb;
  prune(out);
  return out;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out = a;
  for (auto& [e, c] : out.coeffs) c = -c;
  return out;
}

std::string poly_str(const LaurentPoly& p) {
  if (p.coeffs.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.coeffs) {
    Int mag = c < 0 ? Int(-c) : c;
    std::string body;
    if (e == 0)
      body = mag.str();
    else {
      std::string power = e == 1 ? "t" : "t^" + std::to_string(e);
      body = (mag == 1) ? power : mag.str() + "*" + power;
    }
    if (first) {
      out = (c < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

GaussianRational eval_poly(const LaurentPoly& p, const GaussianRational& value) {
  GaussianRational acc;
  for (const auto& [e, c] : p.coeffs) {
    GaussianRational coeff{Rational(c), Rational(0)};
    acc += coeff * value.pow(e);
  }
  return acc;
}

LaurentMatrix laurent_identity(int n) {
  LaurentMatrix m;
  m.size = n;
  m.entries.assign(n, std::vector<LaurentPoly>(n));
  for (int i = 0; i < n; ++i) m.entries[i][i] = lp_const(1);
  return m;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.size != b.size) throw std::invalid_argument("matrix size mismatch");
  LaurentMatrix out;
  out.size = a.size;
  out.entries.assign(a.size, std::vector<LaurentPoly>(a.size));
  for (int i = 0; i < a.size; ++i)
    for (int k = 0; k < a.size; ++k) {
      if (a.entries[i][k].is_zero()) continue;
      for (int j = 0; j < a.size; ++j) {
        if (b.entries[k][j].is_zero()) continue;
        out.entries[i][j] = out.entries[i][j] + a.entries[i][k] * b.entries[k][j];
      }
    }
  return out;
}

LaurentPoly determinant(const LaurentMatrix& m) {
  // Cofactor expansion along the first row; fine for the small sizes here.
  if (m.size == 0) return lp_const(1);
  if (m.size == 1) return m.entries[0][0];
  LaurentPoly det;
  for (int j = 0; j < m.size; ++j) {
    if (m.entries[0][j].is_zero()) continue;
    LaurentMatrix minor;
    minor.size = m.size - 1;
    minor.entries.assign(minor.size, std::vector<LaurentPoly>(minor.size));
    for (int r = 1; r < m.size; ++r)
      for (int c = 0, cc = 0; c < m.size; ++c) {
        if (c == j) continue;
        minor.entries[r - 1][cc++] = m.entries[r][c];
      }
    LaurentPoly term = m.entries[0][j] * determinant(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

GaussianMatrix operator*(const GaussianMatrix& a, const GaussianMatrix& b) {
  if (a.size != b.size) throw std::invalid_argument("matrix size mismatch");
  GaussianMatrix out;
  out.size = a.size;
  out.entries.assign(a.size, std::vector<GaussianRational>(a.size));
  for (int i = 0; i < a.size; ++i)
    for (int k = 0; k < a.size; ++k)
      for (int j = 0; j < a.size; ++j)
        out.entries[i][j] += a.entries[i][k] * b.entries[k][j];
  return out;
}

GaussianRational determinant(GaussianMatrix m) {
  GaussianRational det{Rational(1)};
  for (int col = 0; col < m.size; ++col) {
    int pivot = -1;
    for (int r = col; r < m.size; ++r)
      if (!m.entries[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return GaussianRational{};
    if (pivot != col) {
      std::swap(m.entries[pivot], m.entries[col]);
      det = det * GaussianRational{Rational(-1)};
    }
    det = det * m.entries[col][col];
    GaussianRational inv = GaussianRational{Rational(1)} / m.entries[col][col];
    for (int r = col + 1; r < m.size; ++r) {
      if (m.entries[r][col].is_zero()) continue;
      GaussianRational f = m.entries[r][col] * inv;
      for (int c = col; c < m.size; ++c)
        m.entries[r][c] = m.entries[r][c] - f * m.entries[col][c];
    }
  }
  return det;
}

BraidWord parse_braid_word(int strands, std::string_view text) {
  if (strands < 2) throw std::invalid_argument("braid words need at least 2 strands");
  BraidWord w;
  w.strands = strands;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || tok[0] != 's')
      throw std::invalid_argument("bad braid letter '" + tok + "': expected s<k> or s<k>^-1");
    int sign = 1;
    std::string index = tok.substr(1);
    if (auto caret = index.find('^'); caret != std::string::npos) {
      if (index.substr(caret) != "^-1")
        throw std::invalid_argument("bad braid letter '" + tok + "': only ^-1 is allowed");
      sign = -1;
      index = index.substr(0, caret);
    }
    if (index.empty() ||
        !std::all_of(index.begin(), index.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw std::invalid_argument("bad braid letter '" + tok + "'");
    int k = std::stoi(index);
    if (k < 1 || k > strands - 1)
      throw std::invalid_argument("generator s" + std::to_string(k) + " out of range for " +
                                  std::to_string(strands) + " strands");
    w.letters.push_back(BraidLetter{k, sign});
  }
  return w;
}

std::string word_str(const BraidWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += " ";
    out += "s" + std::to_string(w.letters[i].k);
    if (w.letters[i].sign < 0) out += "^-1";
  }
  return out;
}

LaurentMatrix burau_generator(int n, int k, int sign) {
  if (n < 2) throw std::invalid_argument("need at least 2 strands");
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("generator index " + std::to_string(k) + " out of range");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  LaurentMatrix m = laurent_identity(n);
  int a = k - 1;
  if (sign == 1) {
    m.entries[a][a] = lp_const(1) - lp_t(1);  // 1 - t
    m.entries[a][a + 1] = lp_t(1);
    m.entries[a + 1][a] = lp_const(1);
    m.entries[a + 1][a + 1] = LaurentPoly{};
  } else {
    m.entries[a][a] = LaurentPoly{};
    m.entries[a][a + 1] = lp_const(1);
    m.entries[a + 1][a] = lp_t(-1);
    m.entries[a + 1][a + 1] = lp_const(1) - lp_t(-1);  // 1 - t^-1
  }
  return m;
}

LaurentMatrix burau(const BraidWord& word) {
  LaurentMatrix m = laurent_identity(word.strands);
  for (const BraidLetter& l : word.letters)
    m = m * burau_generator(word.strands, l.k, l.sign);
  return m;
}

GaussianMatrix specialize(const LaurentMatrix& m, const GaussianRational& value) {
  if (value.is_zero()) throw std::domain_error("specialization point must be a unit (nonzero)");
  GaussianMatrix out;
  out.size = m.size;
  out.entries.assign(m.size, std::vector<GaussianRational>(m.size));
  for (int i = 0; i < m.size; ++i)
    for (int j = 0; j < m.size; ++j) out.entries[i][j] = eval_poly(m.entries[i][j], value);
  return out;
}

bool check_braid_relations(int n) {
  if (n < 2) throw std::invalid_argument("need at least 2 strands");
  for (int k = 1; k + 1 <= n - 1; ++k) {
    LaurentMatrix a = burau_generator(n, k);
    LaurentMatrix b = burau_generator(n, k + 1);
    if (!(a * b * a == b * a * b)) return false;
  }
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) {
      LaurentMatrix a = burau_generator(n, i);
      LaurentMatrix b = burau_generator(n, j);
      if (!(a * b == b * a)) return false;
    }
  return true;
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  for (int i = 0; i < n; ++i) p.images[i] = i;
  return p;
}

Permutation Permutation::after(const Permutation& first) const {
  if (size() != first.size()) throw std::invalid_argument("permutation size mismatch");
  Permutation out;
  out.images.resize(images.size());
  for (int j = 0; j < size(); ++j) out.images[j] = images[first.images[j]];
  return out;
}

Permutation parse_cycles(int n, std::string_view text) {
  Permutation p = Permutation::identity(n);
  std::vector<bool> seen(n, false);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size()) throw std::invalid_argument("empty permutation; use () for identity");
  bool any = false;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos >= text.size()) throw std::invalid_argument("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw std::invalid_argument("expected entry in cycle");
      int v = std::stoi(std::string(text.substr(start, pos - start)));
      if (v < 1 || v > n)
        throw std::invalid_argument("cycle entry " + std::to_string(v) + " out of range 1.." +
                                    std::to_string(n));
      if (seen[v - 1])
        throw std::invalid_argument("entry " + std::to_string(v) + " repeats across cycles");
      seen[v - 1] = true;
      cycle.push_back(v - 1);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      p.images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    any = true;
  }
  if (!any) throw std::invalid_argument("no cycles found");
  return p;
}

std::string cycle_str(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.images.size(), false);
  for (int start = 0; start < p.size(); ++start) {
    if (seen[start] || p.images[start] == start) continue;
    out += "(";
    int cur = start;
    bool first = true;
    do {
      seen[cur] = true;
      if (!first) out += " ";
      first = false;
      out += std::to_string(cur + 1);
      cur = p.images[cur];
    } while (cur != start);
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation permutation_at_1(const BraidWord& word) {
  GaussianMatrix m = specialize(burau(word), GaussianRational{Rational(1)});
  Permutation p;
  p.images.assign(word.strands, -1);
  for (int j = 0; j < m.size; ++j) {
    int hit = -1;
    for (int i = 0; i < m.size; ++i) {
      const GaussianRational& e = m.entries[i][j];
      if (e.is_zero()) continue;
      if (e == GaussianRational{Rational(1)} && hit < 0)
        hit = i;
      else
        throw std::logic_error("t = 1 specialization is not a permutation matrix");
    }
    if (hit < 0) throw std::logic_error("t = 1 specialization has a zero column");
    p.images[j] = hit;
  }
  return p;
}

namespace {

void check_distinct(const std::vector<GaussianRational>& points) {
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b)
      if (points[a] == points[b])
        throw std::invalid_argument("configuration points " + std::to_string(a + 1) + " and " +
                                    std::to_string(b + 1) + " coincide");
}

GaussianMatrix vandermonde_matrix(const std::vector<GaussianRational>& points) {
  int n = int(points.size());
  GaussianMatrix v;
  v.size = n;
  v.entries.assign(n, std::vector<GaussianRational>(n));
  for (int j = 0; j < n; ++j) {
    GaussianRational power{Rational(1)};
    for (int i = 0; i < n; ++i) {
      v.entries[i][j] = power;
      power *= points[j];
    }
  }
  return v;
}

}  // namespace

GaussianRational vandermonde_det(const std::vector<GaussianRational>& points) {
  check_distinct(points);
  return determinant(vandermonde_matrix(points));
}

std::vector<GaussianRational> vandermonde_apply(const std::vector<GaussianRational>& points,
                                                const std::vector<GaussianRational>& x) {
  if (points.size() != x.size())
    throw std::invalid_argument("configuration and coefficient vector sizes differ");
  std::size_t n = points.size();
  std::vector<GaussianRational> y(n);
  std::vector<GaussianRational> power(n, GaussianRational{Rational(1)});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      y[i] += power[j] * x[j];
      power[j] *= points[j];
    }
  }
  return y;
}

bool vandermonde_trivialization_check(const std::vector<GaussianRational>& points,
                                      const Permutation& perm,
                                      const std::vector<GaussianRational>& x) {
  if (int(points.size()) != perm.size())
    throw std::invalid_argument("permutation size does not match configuration");
  check_distinct(points);
  if (vandermonde_det(points).is_zero())
    throw std::logic_error("Vandermonde determinant vanished on distinct points");

  std::vector<GaussianRational> y = vandermonde_apply(points, x);
  std::vector<GaussianRational> pz(points.size()), px(points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    pz[std::size_t(perm(int(j)))] = points[j];
    px[std::size_t(perm(int(j)))] = x[j];
  }
  return vandermonde_apply(pz, px) == y;
}

}  // namespace braidtop::burau

#include "braidtop/arnold.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <utility>

namespace braidtop::arnold {

namespace {

void check_gen(int n, const Gen& g) {
  if (!(1 <= g.j && g.j < g.i && g.i <= n))
    throw std::invalid_argument("invalid generator A[" + std::to_string(g.i) + "," +
                                std::to_string(g.j) + "] for n = " + std::to_string(n));
}

// Anticommutative sort: sorted monomial and the sign of the permutation,
// or nullopt when a generator repeats (its square is zero).
std::optional<std::pair<Monomial, int>> sort_with_sign(Monomial m) {
  int sign = 1;
  for (std::size_t a = 1; a < m.size(); ++a) {
    for (std::size_t b = a; b > 0 && !(m[b - 1] < m[b]); --b) {
      if (m[b - 1] == m[b]) return std::nullopt;
      std::swap(m[b - 1], m[b]);
      sign = -sign;
    }
  }
  return std::make_pair(std::move(m), sign);
}

// Drop zeros; over F2 normalize coefficients to 1.
void finalize(std::map<Monomial, Int>& terms, Ring ring) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (ring == Ring::F2) it->second = is_even(it->second) ? 0 : 1;
    if (it->second == 0)
      it = terms.erase(it);
    else
      ++it;
  }
}

std::string terms_str(const std::map<Monomial, Int>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Int mag = c < 0 ? Int(-c) : c;
    std::string body;
    if (m.empty())
      body = mag.str();
    else if (mag == 1)
      body = monomial_str(m);
    else
      body = mag.str() + "*" + monomial_str(m);
    if (first) {
      out = (c < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

}  // namespace

bool is_admissible(const Monomial& m) {
  for (std::size_t k = 0; k + 1 < m.size(); ++k)
    if (m[k].i >= m[k + 1].i) return false;
  return true;
}

ArnoldClass generator(int n, int i, int j, Ring ring) {
  Gen g{i, j};
  check_gen(n, g);
  ArnoldClass out{n, ring, 1, {}};
  out.terms[{g}] = 1;
  return out;
}

ExteriorClass exterior_form(int n, Ring ring, int degree, const std::vector<RawTerm>& raw) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  ExteriorClass out{n, ring, degree, {}};
  for (const RawTerm& term : raw) {
    if (int(term.factors.size()) != degree)
      throw std::invalid_argument("inhomogeneous word: factor count " +
                                  std::to_string(term.factors.size()) + " in a degree-" +
                                  std::to_string(degree) + " class");
    for (const Gen& g : term.factors) check_gen(n, g);
    auto sorted = sort_with_sign(term.factors);
    if (!sorted) continue;
    out.terms[sorted->first] += term.coeff * sorted->second;
  }
  finalize(out.terms, ring);
  return out;
}

ArnoldClass straighten(const ExteriorClass& e) {
  ArnoldClass out{e.n, e.ring, e.degree, {}};
  std::vector<std::pair<Monomial, Int>> work(e.terms.begin(), e.terms.end());
  while (!work.empty()) {
    auto [m, c] = std::move(work.back());
    work.pop_back();

    std::size_t k = 0;
    bool reducible = false;
    for (; k + 1 < m.size(); ++k) {
      if (m[k].i == m[k + 1].i) {
        reducible = true;
        break;
      }
    }
    if (!reducible) {
      out.terms[m] += c;
      continue;
    }

    // m is sorted, so the shared first index i carries j = m[k].j < t = m[k+1].j.
    // Three-term rewrite: A_{i,j}A_{i,t} -> A_{t,j}A_{i,t} - A_{t,j}A_{i,j}.
    int i = m[k].i, j = m[k].j, t = m[k + 1].j;
    Monomial w1 = m, w2 = m;
    w1[k] = Gen{t, j};
    w1[k + 1] = Gen{i, t};
    w2[k] = Gen{t, j};
    w2[k + 1] = Gen{i, j};
    if (auto s = sort_with_sign(std::move(w1)))
      work.emplace_back(std::move(s->first), c * s->second);
    if (auto s = sort_with_sign(std::move(w2)))
      work.emplace_back(std::move(s->first), -c * s->second);
  }
  finalize(out.terms, e.ring);
  return out;
}

ArnoldClass straighten(int n, Ring ring, int degree, const std::vector<RawTerm>& raw) {
  return straighten(exterior_form(n, ring, degree, raw));
}

ArnoldClass multiply(const ArnoldClass& a, const ArnoldClass& b) {
  if (a.n != b.n) throw std::invalid_argument("strand count mismatch in product");
  if (a.ring != b.ring) throw std::invalid_argument("coefficient ring mismatch in product");
  std::vector<RawTerm> raw;
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) {
      RawTerm t{ca * cb, ma};
      t.factors.insert(t.factors.end(), mb.begin(), mb.end());
      raw.push_back(std::move(t));
    }
  }
  return straighten(a.n, a.ring, a.degree + b.degree, raw);
}

ArnoldClass add(const ArnoldClass& a, const ArnoldClass& b) {
  if (a.n != b.n || a.ring != b.ring || a.degree != b.degree)
    throw std::invalid_argument("sum of incompatible classes");
  ArnoldClass out = a;
  for (const auto& [m, c] : b.terms) out.terms[m] += c;
  finalize(out.terms, out.ring);
  return out;
}

ArnoldClass negate(const ArnoldClass& a) {
  ArnoldClass out = a;
  if (out.ring == Ring::Z)
    for (auto& [m, c] : out.terms) c = -c;
  return out;
}

namespace {

void gen_basis(int n, int t, int min_i, Monomial& cur, std::vector<Monomial>& out) {
  if (int(cur.size()) == t) {
    out.push_back(cur);
    return;
  }
  for (int i = min_i; i <= n; ++i) {
    for (int j = 1; j < i; ++j) {
      cur.push_back(Gen{i, j});
      gen_basis(n, t, i + 1, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<Monomial> basis(int n, int t) {
  if (n < 1) throw std::invalid_argument("strand count must be positive");
  if (t < 0 || t > n - 1) return {};
  std::vector<Monomial> out;
  Monomial cur;
  gen_basis(n, t, 2, cur, out);
  return out;
}

long dim(int n, int t) { return long(basis(n, t).size()); }

ArnoldClass reduce_mod2(const ArnoldClass& a) {
  ArnoldClass out{a.n, Ring::F2, a.degree, a.terms};
  finalize(out.terms, Ring::F2);
  return out;
}

ExteriorClass reduce_mod2(const ExteriorClass& e) {
  ExteriorClass out{e.n, Ring::F2, e.degree, e.terms};
  finalize(out.terms, Ring::F2);
  return out;
}

std::string monomial_str(const Monomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (k) out += "*";
    out += "A[" + std::to_string(m[k].i) + "," + std::to_string(m[k].j) + "]";
  }
  return out;
}

std::string class_str(const ArnoldClass& a) { return terms_str(a.terms); }
std::string class_str(const ExteriorClass& e) { return terms_str(e.terms); }

namespace {

struct Parser {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
  }
  Int number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return Int{std::string(s.substr(start, pos - start))};
  }
  int small_number() {
    Int v = number();
    if (v > 1000000) fail("index too large");
    return int(v);
  }

  // factor := integer | 'A[' i ',' j ']'
  void factor(RawTerm& term) {
    skip_ws();
    if (pos >= s.size()) fail("expected factor");
    if (s[pos] == 'A') {
      ++pos;
      if (!eat('[')) fail("expected '[' after A");
      int i = small_number();
      if (!eat(',')) fail("expected ',' in generator");
      int j = small_number();
      if (!eat(']')) fail("expected ']' in generator");
      term.factors.push_back(Gen{i, j});
    } else if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      term.coeff *= number();
    } else {
      fail(std::string("unexpected character '") + s[pos] + "'");
    }
  }

  RawTerm term() {
    RawTerm t{Int(1), {}};
    factor(t);
    while (true) {
      std::size_t save = pos;
      if (!eat('*')) {
        pos = save;
        break;
      }
      factor(t);
    }
    return t;
  }

  std::vector<RawTerm> expr() {
    std::vector<RawTerm> terms;
    int sign = eat('-') ? -1 : 1;
    while (true) {
      RawTerm t = term();
      t.coeff *= sign;
      terms.push_back(std::move(t));
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+'))
        sign = 1;
      else if (eat('-'))
        sign = -1;
      else
        fail("expected '+', '-', or end of input");
    }
    return terms;
  }
};

}  // namespace

ArnoldClass parse_class(int n, Ring ring, std::string_view text) {
  Parser p{text};
  std::vector<RawTerm> terms = p.expr();
  int degree = int(terms.front().factors.size());
  for (const RawTerm& t : terms)
    if (int(t.factors.size()) != degree)
      throw std::invalid_argument("inhomogeneous expression: degrees " + std::to_string(degree) +
                                  " and " + std::to_string(t.factors.size()));
  return straighten(n, ring, degree, terms);
}

std::vector<RawTerm> three_term_relator(int i, int t, int j) {
  if (!(1 <= j && j < t && t < i))
    throw std::invalid_argument("three-term relator needs j < t < i with j >= 1");
  return {
      RawTerm{Int(1), {Gen{i, j}, Gen{i, t}}},
      RawTerm{Int(-1), {Gen{t, j}, Gen{i, t}}},
      RawTerm{Int(1), {Gen{t, j}, Gen{i, j}}},
  };
}

}  // namespace braidtop::arnold

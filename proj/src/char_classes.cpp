#include "braidtop/char_classes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace braidtop::sw {

namespace {

// XOR-insert: F2 addition of a single monomial into a term set.
void toggle(std::set<std::uint64_t>& terms, std::uint64_t m) {
  auto [it, inserted] = terms.insert(m);
  if (!inserted) terms.erase(it);
}

}  // namespace

std::string f2_str(const F2Class& c) {
  if (c.terms.empty()) return "0";
  std::string out;
  bool first_term = true;
  for (std::uint64_t m : c.terms) {
    if (!first_term) out += " + ";
    first_term = false;
    if (m == 0) {
      out += "1";
      continue;
    }
    bool first_factor = true;
    for (int b = 0; b < 64; ++b) {
      if (!(m >> b & 1)) continue;
      if (!first_factor) out += "*";
      first_factor = false;
      out += "e" + std::to_string(b + 1);
    }
  }
  return out;
}

ToralRep make_rep(int n, std::vector<std::uint64_t> rows) {
  if (n < 0 || n > 64) throw std::invalid_argument("column count must be in 0..64");
  std::uint64_t allowed = n == 64 ? ~0ULL : (1ULL << n) - 1;
  std::uint64_t parity = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] & ~allowed)
      throw std::invalid_argument("row " + std::to_string(i) + " has a bit beyond column " +
                                  std::to_string(n));
    parity ^= rows[i];
  }
  ToralRep rep;
  rep.n = n;
  rep.rows = std::move(rows);
  rep.special_orthogonal = (parity == 0);
  return rep;
}

ToralRep parse_rep(std::string_view text) {
  std::vector<std::uint64_t> rows;
  int n = -1;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;

    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;

    std::istringstream in{std::string(line)};
    std::string tok;
    std::uint64_t row = 0;
    int col = 0;
    while (in >> tok) {
      if (tok != "0" && tok != "1")
        throw std::invalid_argument("line " + std::to_string(line_no) + ": entry '" + tok +
                                    "' is not 0 or 1");
      if (col >= 64)
        throw std::invalid_argument("line " + std::to_string(line_no) + ": more than 64 columns");
      if (tok == "1") row |= 1ULL << col;
      ++col;
    }
    if (n < 0) n = col;
    if (col != n)
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " +
                                  std::to_string(col) + " entries, expected " + std::to_string(n));
    rows.push_back(row);
  }
  return make_rep(n < 0 ? 0 : n, std::move(rows));
}

ToralRep whitney_sum(const ToralRep& a, const ToralRep& b) {
  if (a.n != b.n) throw std::invalid_argument("column count mismatch in Whitney sum");
  std::vector<std::uint64_t> rows = a.rows;
  rows.insert(rows.end(), b.rows.begin(), b.rows.end());
  return make_rep(a.n, std::move(rows));
}

F2Class sw_total(const ToralRep& rep, int k) {
  if (k < 0) throw std::invalid_argument("negative degree");
  F2Class out{rep.n, k, {}};
  if (k > rep.q()) return out;

  // Elementary symmetric recurrence e_d <- e_d + v * e_{d-1}, degrees
  // descending so each row enters once.
  std::vector<std::set<std::uint64_t>> elem(std::size_t(k) + 1);
  elem[0].insert(0);
  for (std::uint64_t v : rep.rows) {
    for (int d = k; d >= 1; --d) {
      for (std::uint64_t m : elem[d - 1]) {
        for (int b = 0; b < rep.n; ++b) {
          if (!(v >> b & 1)) continue;
          std::uint64_t bit = 1ULL << b;
          if (m & bit) continue;  // squares vanish
          toggle(elem[d], m | bit);
        }
      }
    }
  }
  out.terms = std::move(elem[k]);
  return out;
}

bool is_stably_trivial(const ToralRep& rep) {
  return sw_total(rep, 1).is_zero() && sw_total(rep, 2).is_zero();
}

PairingWitness pairing_witness(const ToralRep& rep) {
  PairingWitness w;
  std::vector<bool> used(rep.rows.size(), false);
  bool matched = true;
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    if (used[i]) continue;
    if (rep.rows[i] == 0) {
      w.zero_rows.push_back(int(i));
      continue;
    }
    bool found = false;
    for (std::size_t j = i + 1; j < rep.rows.size(); ++j) {
      if (!used[j] && rep.rows[j] == rep.rows[i]) {
        used[i] = used[j] = true;
        w.pairs.emplace_back(int(i), int(j));
        found = true;
        break;
      }
    }
    if (!found) matched = false;
  }
  if (matched) {
    w.trivial = true;
    return w;
  }
  w.pairs.clear();
  w.zero_rows.clear();
  F2Class w1 = sw_total(rep, 1);
  if (!w1.is_zero()) {
    w.obstruction_degree = 1;
    w.obstruction = std::move(w1);
    return w;
  }
  F2Class w2 = sw_total(rep, 2);
  if (w2.is_zero())
    throw std::logic_error("rows admit no pairing yet w1 = w2 = 0");
  w.obstruction_degree = 2;
  w.obstruction = std::move(w2);
  return w;
}

int pair_index(int strands, int i, int j) {
  if (!(1 <= j && j < i && i <= strands))
    throw std::invalid_argument("pair (" + std::to_string(i) + "," + std::to_string(j) +
                                ") out of range for " + std::to_string(strands) + " strands");
  return (i - 1) * (i - 2) / 2 + (j - 1);
}

arnold::Gen pair_of_index(int strands, int index) {
  int count = strands * (strands - 1) / 2;
  if (index < 0 || index >= count) throw std::invalid_argument("pair index out of range");
  int i = 2;
  while ((i) * (i - 1) / 2 <= index) ++i;
  int j = index - (i - 1) * (i - 2) / 2 + 1;
  return arnold::Gen{i, j};
}

namespace {

int pair_count(int strands) {
  if (strands < 2) throw std::invalid_argument("need at least 2 strands");
  int count = strands * (strands - 1) / 2;
  if (count > 64) throw std::invalid_argument("too many strand pairs for 64 columns");
  return count;
}

void check_admissible(const arnold::Monomial& m) {
  if (!arnold::is_admissible(m)) throw std::invalid_argument("monomial is not admissible");
}

}  // namespace

ToralRep alpha_rep(int strands, const arnold::Monomial& monomial) {
  int n = pair_count(strands);
  check_admissible(monomial);
  std::vector<std::uint64_t> rows;
  for (const arnold::Gen& g : monomial)
    rows.push_back(1ULL << pair_index(strands, g.i, g.j));
  return make_rep(n, std::move(rows));
}

ToralRep beta_rep(int strands, const arnold::Monomial& monomial) {
  ToralRep rep = alpha_rep(strands, monomial);
  std::uint64_t parity = 0;
  for (std::uint64_t r : rep.rows) parity ^= r;
  rep.rows.push_back(parity);
  rep.special_orthogonal = true;
  return rep;
}

arnold::ArnoldClass to_arnold(int strands, const F2Class& c) {
  if (c.n != pair_count(strands))
    throw std::invalid_argument("class columns do not match strand pairs");
  std::vector<arnold::RawTerm> raw;
  for (std::uint64_t m : c.terms) {
    arnold::RawTerm t{Int(1), {}};
    for (int b = 0; b < c.n; ++b)
      if (m >> b & 1) t.factors.push_back(pair_of_index(strands, b));
    raw.push_back(std::move(t));
  }
  return arnold::straighten(strands, arnold::Ring::F2, c.degree, raw);
}

F2Class from_arnold(int strands, const arnold::ArnoldClass& c) {
  if (c.ring != arnold::Ring::F2) throw std::invalid_argument("expected an F2 class");
  if (c.n != strands) throw std::invalid_argument("strand count mismatch");
  F2Class out{pair_count(strands), c.degree, {}};
  for (const auto& [m, coeff] : c.terms) {
    std::uint64_t mask = 0;
    for (const arnold::Gen& g : m) mask |= 1ULL << pair_index(strands, g.i, g.j);
    toggle(out.terms, mask);
  }
  return out;
}

ToralRep realize_sw(int strands, const arnold::ArnoldClass& zeta1,
                    const arnold::ArnoldClass& zeta2) {
  if (zeta1.ring != arnold::Ring::F2 || zeta2.ring != arnold::Ring::F2)
    throw std::invalid_argument("realize_sw needs F2 classes");
  if (zeta1.n != strands || zeta2.n != strands)
    throw std::invalid_argument("strand count mismatch");
  if (zeta1.degree != 1 && !zeta1.is_zero())
    throw std::invalid_argument("zeta1 must have degree 1");
  if (zeta2.degree != 2 && !zeta2.is_zero())
    throw std::invalid_argument("zeta2 must have degree 2");

  int n = pair_count(strands);
  ToralRep rep = make_rep(n, {});
  if (!zeta1.is_zero()) {
    // One line bundle carrying all of zeta1; contributes nothing to w2.
    std::uint64_t row = 0;
    for (const auto& [m, coeff] : zeta1.terms)
      row ^= 1ULL << pair_index(strands, m[0].i, m[0].j);
    rep = whitney_sum(rep, make_rep(n, {row}));
  }
  for (const auto& [m, coeff] : zeta2.terms)
    rep = whitney_sum(rep, beta_rep(strands, m));

  arnold::ArnoldClass w1 = to_arnold(strands, sw_total(rep, 1));
  arnold::ArnoldClass w2 = to_arnold(strands, sw_total(rep, 2));
  // Compare up to the zero class's degree bookkeeping.
  bool ok1 = zeta1.is_zero() ? w1.is_zero() : (w1.degree == 1 && w1.terms == zeta1.terms);
  bool ok2 = zeta2.is_zero() ? w2.is_zero() : (w2.degree == 2 && w2.terms == zeta2.terms);
  if (!ok1 || !ok2) throw std::logic_error("realized classes do not match the request");
  return rep;
}

}  // namespace braidtop::sw

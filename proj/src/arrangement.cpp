#include "braidtop/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace braidtop::arrangement {

namespace {

// Augmented rows (normal entries then offset) in reduced row echelon form.
// This is a canonical form for the affine subspace cut out by the rows, so
// two flats coincide exactly when their Rref rows are equal.
using Row = std::vector<Rational>;

struct Rref {
  std::vector<Row> rows;      // nonzero rows, leading 1, pivot columns cleared
  std::vector<int> pivots;    // pivot column per row, strictly increasing
  bool consistent = true;     // false iff some row is (0 ... 0 | c), c != 0

  bool operator<(const Rref& o) const { return rows < o.rows; }
  bool operator==(const Rref& o) const { return rows == o.rows; }
};

int offset_col(const Rref& r) { return r.rows.empty() ? -1 : int(r.rows[0].size()) - 1; }

// Eliminate the pivots of `rref` from `row` in place.
void reduce_row(const Rref& rref, Row& row) {
  for (std::size_t k = 0; k < rref.rows.size(); ++k) {
    const Rational& c = row[rref.pivots[k]];
    if (c == 0) continue;
    const Row& pivot_row = rref.rows[k];
    Rational factor = c;  // pivot entry is 1
    for (std::size_t j = 0; j < row.size(); ++j) row[j] -= factor * pivot_row[j];
  }
}

// Insert one augmented row, keeping reduced echelon form.  A pivot in the
// offset column marks the system inconsistent (empty intersection).
void rref_insert(Rref& rref, Row row, int dim) {
  reduce_row(rref, row);
  int piv = -1;
  for (int j = 0; j <= dim; ++j) {
    if (row[j] != 0) { piv = j; break; }
  }
  if (piv < 0) return;  // dependent row
  if (piv == dim) { rref.consistent = false; return; }
  Rational lead = row[piv];
  for (auto& e : row) e /= lead;
  // Clear the new pivot column from the existing rows.
  for (std::size_t k = 0; k < rref.rows.size(); ++k) {
    Rational c = rref.rows[k][piv];
    if (c == 0) continue;
    for (std::size_t j = 0; j < row.size(); ++j) rref.rows[k][j] -= c * row[j];
  }
  auto pos = std::upper_bound(rref.pivots.begin(), rref.pivots.end(), piv) - rref.pivots.begin();
  rref.pivots.insert(rref.pivots.begin() + pos, piv);
  rref.rows.insert(rref.rows.begin() + pos, std::move(row));
}

Row hyperplane_row(const Hyperplane& h) {
  Row row(h.normal.begin(), h.normal.end());
  row.push_back(h.offset);
  return row;
}

// True iff the flat described by `rref` lies inside the hyperplane, i.e. the
// hyperplane's functional is a combination of the flat's defining equations.
bool flat_in_hyperplane(const Rref& rref, const Hyperplane& h) {
  Row row = hyperplane_row(h);
  reduce_row(rref, row);
  return std::all_of(row.begin(), row.end(), [](const Rational& c) { return c == 0; });
}

// A point on the flat: free variables 0, solve for pivots.
std::vector<Rational> flat_basepoint(const Rref& rref, int dim) {
  std::vector<Rational> point(dim, Rational(0));
  for (std::size_t k = 0; k < rref.rows.size(); ++k)
    point[rref.pivots[k]] = rref.rows[k][dim];
  return point;
}

std::pair<Row, Rational> scaled_form(const Hyperplane& h) {
  Row n(h.normal.begin(), h.normal.end());
  Rational off = h.offset;
  for (const Rational& c : n) {
    if (c != 0) {
      Rational lead = c;
      for (auto& e : n) e /= lead;
      off /= lead;
      break;
    }
  }
  return {std::move(n), std::move(off)};
}

}  // namespace

Arrangement make_arrangement(int ambient_dim, std::vector<Hyperplane> hyperplanes) {
  if (ambient_dim < 1) throw std::invalid_argument("ambient dimension must be positive");
  std::vector<std::pair<Row, Rational>> seen;
  for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
    const Hyperplane& h = hyperplanes[i];
    if (int(h.normal.size()) != ambient_dim)
      throw std::invalid_argument("hyperplane " + std::to_string(i) + ": normal has length " +
                                  std::to_string(h.normal.size()) + ", expected " +
                                  std::to_string(ambient_dim));
    if (std::all_of(h.normal.begin(), h.normal.end(), [](const Rational& c) { return c == 0; }))
      throw std::invalid_argument("hyperplane " + std::to_string(i) + ": zero normal vector");
    auto form = scaled_form(h);
    if (std::find(seen.begin(), seen.end(), form) != seen.end())
      throw std::invalid_argument("hyperplane " + std::to_string(i) +
                                  " duplicates an earlier one");
    seen.push_back(std::move(form));
  }
  return Arrangement{ambient_dim, std::move(hyperplanes)};
}

Arrangement parse_arrangement(std::string_view text) {
  std::vector<Hyperplane> planes;
  std::vector<std::pair<Row, Rational>> seen;
  std::vector<int> plane_lines;
  int dim = -1;

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

    std::size_t bar = line.find('|');
    if (bar == std::string_view::npos || line.find('|', bar + 1) != std::string_view::npos)
      throw ParseError(ParseErrorKind::MalformedLine, line_no,
                       "line " + std::to_string(line_no) +
                           ": expected `n_1 ... n_l | offset` with a single `|`");

    auto tokens = [](std::string_view s) {
      std::vector<std::string> out;
      std::istringstream in{std::string(s)};
      std::string tok;
      while (in >> tok) out.push_back(tok);
      return out;
    };
    std::vector<std::string> lhs = tokens(line.substr(0, bar));
    std::vector<std::string> rhs = tokens(line.substr(bar + 1));

    if (lhs.empty() || rhs.size() != 1)
      throw ParseError(ParseErrorKind::MalformedLine, line_no,
                       "line " + std::to_string(line_no) +
                           ": expected `n_1 ... n_l | offset` with a single `|`");
    if (dim < 0) dim = int(lhs.size());
    if (int(lhs.size()) != dim)
      throw ParseError(ParseErrorKind::DimensionMismatch, line_no,
                       "line " + std::to_string(line_no) + ": " + std::to_string(lhs.size()) +
                           " normal entries, expected " + std::to_string(dim));

    Hyperplane h;
    try {
      for (const std::string& t : lhs) h.normal.push_back(parse_rational(t));
      h.offset = parse_rational(rhs[0]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(ParseErrorKind::MalformedRational, line_no,
                       "line " + std::to_string(line_no) + ": " + e.what());
    }
    if (std::all_of(h.normal.begin(), h.normal.end(), [](const Rational& c) { return c == 0; }))
      throw ParseError(ParseErrorKind::ZeroNormal, line_no,
                       "line " + std::to_string(line_no) + ": zero normal vector");
    auto form = scaled_form(h);
    auto prev = std::find(seen.begin(), seen.end(), form);
    if (prev != seen.end())
      throw ParseError(ParseErrorKind::DuplicateHyperplane, line_no,
                       "line " + std::to_string(line_no) + ": duplicate of line " +
                           std::to_string(plane_lines[prev - seen.begin()]));
    seen.push_back(std::move(form));
    plane_lines.push_back(line_no);
    planes.push_back(std::move(h));
  }

  if (planes.empty())
    throw ParseError(ParseErrorKind::EmptyInput, 0, "no hyperplanes in input");
  return Arrangement{dim, std::move(planes)};
}

Arrangement braid_arrangement(int n) {
  if (n < 2) throw std::invalid_argument("braid arrangement needs n >= 2");
  std::vector<Hyperplane> planes;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Hyperplane h;
      h.normal.assign(n, Rational(0));
      h.normal[i] = 1;
      h.normal[j] = -1;
      planes.push_back(std::move(h));
    }
  }
  return Arrangement{n, std::move(planes)};
}

Arrangement boolean_arrangement(int n) {
  if (n < 1) throw std::invalid_argument("boolean arrangement needs n >= 1");
  std::vector<Hyperplane> planes;
  for (int i = 0; i < n; ++i) {
    Hyperplane h;
    h.normal.assign(n, Rational(0));
    h.normal[i] = 1;
    planes.push_back(std::move(h));
  }
  return Arrangement{n, std::move(planes)};
}

bool IntersectionPoset::leq(int x, int y) const {
  const auto& dx = flats[x].defining_set;
  const auto& dy = flats[y].defining_set;
  return std::includes(dy.begin(), dy.end(), dx.begin(), dx.end());
}

std::vector<std::pair<int, int>> IntersectionPoset::cover_relations() const {
  std::vector<std::pair<int, int>> covers;
  int n = int(flats.size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || !leq(x, y)) continue;
      bool is_cover = true;
      for (int z = 0; z < n && is_cover; ++z) {
        if (z == x || z == y) continue;
        if (leq(x, z) && leq(z, y)) is_cover = false;
      }
      if (is_cover) covers.emplace_back(x, y);
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

IntersectionPoset intersection_poset(const Arrangement& arr) {
  const int dim = arr.ambient_dim;
  const int m = int(arr.hyperplanes.size());

  std::map<Rref, int> index_of;
  std::vector<Rref> forms;
  std::deque<int> queue;

  auto add_flat = [&](Rref rref) -> void {
    if (!rref.consistent) return;
    if (index_of.count(rref)) return;
    int id = int(forms.size());
    index_of.emplace(rref, id);
    forms.push_back(std::move(rref));
    queue.push_back(id);
  };

  add_flat(Rref{});  // the ambient space
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int h = 0; h < m; ++h) {
      Rref form = forms[cur];  // copy before refining
      if (flat_in_hyperplane(form, arr.hyperplanes[h])) continue;
      rref_insert(form, hyperplane_row(arr.hyperplanes[h]), dim);
      add_flat(std::move(form));
    }
  }

  std::vector<Flat> flats;
  flats.reserve(forms.size());
  for (const Rref& form : forms) {
    Flat f;
    f.rank = int(form.rows.size());
    f.direction_dim = dim - f.rank;
    f.basepoint = flat_basepoint(form, dim);
    for (int h = 0; h < m; ++h)
      if (flat_in_hyperplane(form, arr.hyperplanes[h])) f.defining_set.push_back(h);
    flats.push_back(std::move(f));
  }

  std::sort(flats.begin(), flats.end(), [](const Flat& a, const Flat& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.defining_set < b.defining_set;
  });

  // Moebius recursion from the bottom; y < x iff def(y) is a proper subset
  // of def(x), and the sort guarantees all such y precede x.
  std::vector<Int> mobius(flats.size());
  for (std::size_t x = 0; x < flats.size(); ++x) {
    if (x == 0) {
      mobius[0] = 1;
      continue;
    }
    Int sum = 0;
    const auto& dx = flats[x].defining_set;
    for (std::size_t y = 0; y < x; ++y) {
      const auto& dy = flats[y].defining_set;
      if (dy.size() < dx.size() && std::includes(dx.begin(), dx.end(), dy.begin(), dy.end()))
        sum += mobius[y];
    }
    mobius[x] = -sum;
  }

  IntersectionPoset poset;
  poset.ambient_dim = dim;
  poset.flats = std::move(flats);
  poset.mobius = std::move(mobius);
  return poset;
}

PoincarePolynomial poincare_polynomial(const IntersectionPoset& poset) {
  std::vector<Int> coeff(std::size_t(poset.ambient_dim) + 1, Int(0));
  for (std::size_t x = 0; x < poset.flats.size(); ++x) {
    int q = poset.flats[x].rank;
    // mu(X) (-t)^rank contributes (-1)^q mu(X) to the t^q coefficient.
    coeff[q] += (q % 2 == 0) ? poset.mobius[x] : -poset.mobius[x];
  }
  while (coeff.size() > 1 && coeff.back() == 0) coeff.pop_back();
  for (const Int& c : coeff)
    if (c < 0) throw std::logic_error("negative Poincare coefficient");
  return PoincarePolynomial{std::move(coeff)};
}

std::vector<Int> betti_numbers(const Arrangement& arr) {
  return poincare_polynomial(intersection_poset(arr)).coefficients;
}

}  // namespace braidtop::arrangement

#pragma once

#include "braidtop/numeric.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace braidtop::arrangement {

/// Affine hyperplane { z in C^l : normal . z = offset }, exact rational data.
struct Hyperplane {
  std::vector<Rational> normal;  // never the zero vector
  Rational offset;
};

struct Arrangement {
  int ambient_dim = 0;
  std::vector<Hyperplane> hyperplanes;
};

/// Validating constructor.  Rejects zero normals, wrong-length normals, and
/// duplicate hyperplanes (equal up to nonzero rational scaling of the pair
/// (normal, offset)).  Throws std::invalid_argument.
Arrangement make_arrangement(int ambient_dim, std::vector<Hyperplane> hyperplanes);

enum class ParseErrorKind {
  EmptyInput,
  MalformedLine,
  MalformedRational,
  ZeroNormal,
  DuplicateHyperplane,
  DimensionMismatch,
};

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& message)
      : std::runtime_error(message), kind_(kind), line_(line) {}
  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }  // 1-based input line, 0 if not line-specific

 private:
  ParseErrorKind kind_;
  int line_;
};

/// One hyperplane per line: l whitespace-separated rationals (`p`, `-p`, or
/// `p/q` with q > 0), then `|`, then one rational offset.  Blank lines and
/// `#` comments are ignored.  Ambient dimension is inferred from the first
/// hyperplane line.
Arrangement parse_arrangement(std::string_view text);

/// The C(n,2) hyperplanes z_i = z_j in C^n, pairs (i,j) with i < j in
/// lexicographic order.  Requires n >= 2.
Arrangement braid_arrangement(int n);

/// The n coordinate hyperplanes z_i = 0 in C^n; the complement is (C*)^n.
/// Requires n >= 1.
Arrangement boolean_arrangement(int n);

/// Nonempty intersection of a subset of hyperplanes.
struct Flat {
  std::vector<int> defining_set;  // maximal, sorted, 0-based hyperplane indices
  int rank = 0;                   // codimension in the ambient space
  std::vector<Rational> basepoint;
  int direction_dim = 0;          // dimension of the solution space
};

/// Flats of an arrangement ordered by reverse inclusion of subspaces
/// (ambient space at the bottom), with Moebius values.  Flats are sorted by
/// (rank, defining_set); a flat's id is its index.
struct IntersectionPoset {
  int ambient_dim = 0;
  std::vector<Flat> flats;
  std::vector<Int> mobius;  // parallel to flats

  /// x <= y in the poset, i.e. y's subspace is contained in x's.
  /// With maximal defining sets this is defining-set inclusion.
  bool leq(int x, int y) const;

  /// Pairs (x, y) with y covering x, lexicographically sorted.
  std::vector<std::pair<int, int>> cover_relations() const;
};

IntersectionPoset intersection_poset(const Arrangement& arr);

/// Coefficients b_0 .. b_top of the Poincare polynomial of the complement,
/// trailing zeros trimmed (b_0 = 1 always).
struct PoincarePolynomial {
  std::vector<Int> coefficients;
};

PoincarePolynomial poincare_polynomial(const IntersectionPoset& poset);

/// Betti numbers of the complement: poset + Whitney-sum formula.
std::vector<Int> betti_numbers(const Arrangement& arr);

}  // namespace braidtop::arrangement

#pragma once

#include "braidtop/arnold.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace braidtop::sw {

/// Homogeneous element of the exterior F2 algebra on e_1 .. e_n.  Each term
/// is a squarefree monomial stored as a bitmask over the 0-based columns;
/// a term's popcount equals `degree`.
struct F2Class {
  int n = 0;
  int degree = 0;
  std::set<std::uint64_t> terms;

  bool is_zero() const { return terms.empty(); }

  friend bool operator==(const F2Class& a, const F2Class& b) {
    return a.n == b.n && a.degree == b.degree && a.terms == b.terms;
  }
};

std::string f2_str(const F2Class& c);

/// Representation of a rank-n free abelian group through a Z/2 torus: a sum
/// of q line bundles, row i the first Stiefel-Whitney class of the i-th.
/// special_orthogonal records that the rows sum to zero, so every matrix in
/// the image has determinant one.
struct ToralRep {
  int n = 0;
  std::vector<std::uint64_t> rows;
  bool special_orthogonal = false;

  int q() const { return int(rows.size()); }
};

/// Validates column bounds (n in 0..64, no bits at column >= n) and derives
/// the special_orthogonal flag.
ToralRep make_rep(int n, std::vector<std::uint64_t> rows);

/// Rows of space-separated 0/1 digits, one line-bundle class per line.
/// Blank lines and `#` comments are ignored.  Throws std::invalid_argument
/// naming the offending line.
ToralRep parse_rep(std::string_view text);

/// Row concatenation; the total class of the sum multiplies.
ToralRep whitney_sum(const ToralRep& a, const ToralRep& b);

/// k-th Stiefel-Whitney class: the k-th elementary symmetric polynomial of
/// the rows in the exterior algebra.  k = 0 gives 1; k > q gives 0.
F2Class sw_total(const ToralRep& rep, int k);

/// True iff w1 and w2 both vanish.  By the even-pairing theorem this also
/// certifies unstable triviality (the bundle itself, not just its stable
/// class) and a Spin lift.
bool is_stably_trivial(const ToralRep& rep);

/// Constructive counterpart of is_stably_trivial: either a perfect matching
/// of equal nonzero rows (plus the zero rows), or the first nonvanishing
/// obstruction among w1, w2.
struct PairingWitness {
  bool trivial = false;
  std::vector<std::pair<int, int>> pairs;  // 0-based row indices, greedy by index
  std::vector<int> zero_rows;
  int obstruction_degree = 0;  // 1 or 2 when not trivial
  F2Class obstruction;
};

PairingWitness pairing_witness(const ToralRep& rep);

/// Column index of the generator pair (i, j), j < i, in the basis of the
/// pure braid abelianization: pairs sorted by (i, j).
int pair_index(int strands, int i, int j);
arnold::Gen pair_of_index(int strands, int index);

/// Coordinate projections of the abelianization of the pure braid group on
/// `strands` strands.  alpha: one row e_{(i_m, j_m)} per factor of the
/// monomial.  beta: the same rows plus their sum, landing in SO(t+1).
ToralRep alpha_rep(int strands, const arnold::Monomial& monomial);
ToralRep beta_rep(int strands, const arnold::Monomial& monomial);

/// A representation whose first two Stiefel-Whitney classes are exactly
/// (zeta1, zeta2): one row realizing zeta1 (omitted when zero) plus one beta
/// block per monomial in the support of zeta2.  Inputs are F2 Arnold classes
/// of degrees 1 and 2; the construction is verified internally and a
/// mismatch throws std::logic_error.
ToralRep realize_sw(int strands, const arnold::ArnoldClass& zeta1,
                    const arnold::ArnoldClass& zeta2);

/// Interpret an exterior class over pair columns inside the braid cohomology
/// ring (e_{(i,j)} -> A_{i,j}, then straighten).
arnold::ArnoldClass to_arnold(int strands, const F2Class& c);

/// Admissible-basis representative of an F2 Arnold class as an exterior
/// class over pair columns.
F2Class from_arnold(int strands, const arnold::ArnoldClass& c);

/// Every unitary representation of a homologically toroidal group gives the
/// zero reduced complex K-class, so the representation-generated subgroup of
/// KU^0 is trivial.  Constant by the theorem; exposed for the CLI.
constexpr bool ku_rep_is_trivial() { return true; }

}  // namespace braidtop::sw

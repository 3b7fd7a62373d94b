#pragma once

#include "braidtop/arnold.hpp"
#include "braidtop/numeric.hpp"

#include <vector>

namespace braidtop::heisenberg {

/// Integer matrix acting on column vectors: rows index target coordinates,
/// columns index source coordinates.
struct LinearMap {
  int source = 0;
  int target = 0;
  std::vector<std::vector<Int>> matrix;  // target rows of source entries

  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.source == b.source && a.target == b.target && a.matrix == b.matrix;
  }
};

/// f after g; throws std::invalid_argument on rank mismatch.
LinearMap compose(const LinearMap& f, const LinearMap& g);
std::vector<Int> apply(const LinearMap& f, const std::vector<Int>& v);

/// Projection of the abelianized pure braid group on n strands onto the three
/// coordinates A_{i,j}, A_{i,t}, A_{t,j}, in that row order.  Source
/// coordinates follow the generator order A_{2,1}, A_{3,1}, A_{3,2}, ...
/// Requires 1 <= j < t < i <= n.
LinearMap p_map(int n, int i, int t, int j);

/// (n1, n2, n3) -> (n1, -n1, n2, n2, n3, n3).
LinearMap delta_map();

/// Coordinate swap 2<->3, 4<->5 on rank 6.
LinearMap sigma_map();

/// sigma_map . delta_map . p_map.
LinearMap pi_map(int n, int i, int t, int j);

/// Pullback of the symplectic class u1 u2 + u3 u4 + u5 u6 along pi_map,
/// expanded over Z in the free exterior algebra on the A generators and left
/// unstraightened.  It equals the three-term word
/// A_{i,j}A_{i,t} - A_{t,j}A_{i,t} + A_{t,j}A_{i,j}, so its normal form is 0.
arnold::ExteriorClass pullback_chi(int n, int i, int t, int j);

struct TripleStatus {
  int i = 0;
  int t = 0;
  int j = 0;
  bool obstruction_zero = false;       // normal form of the pullback vanishes over Z
  bool obstruction_zero_mod2 = false;  // and over F2 (the spin lifting condition)
};

struct LiftReport {
  int n = 0;
  std::vector<TripleStatus> triples;
  bool all_zero = false;
  int degree1_span_dim = 0;  // mod-2 rank of all rows A_{i,j}, A_{i,t}, A_{t,j}
  bool degree1_spans = false;  // span reaches the full C(n,2)
};

/// Checks every triple j < t < i <= n.  Requires n >= 3.
LiftReport verify_all_lifts(int n);

/// Certificate that on three strands the composite into the product of
/// Heisenberg groups is injective on the quotient by the third lower central
/// series term, after tensoring with Z/2: the abelianization layer embeds
/// (full mod-2 column rank) and the commutator layer embeds (odd symplectic
/// pairing, with the sign pattern forced by the infinitesimal braid
/// relations [A21,A31] = -[A21,A32] = [A31,A32]).
struct MonomorphismWitness {
  int abelianization_rank_mod2 = 0;   // of the 6x3 matrix pi_map(3,3,2,1)
  std::vector<Int> commutator_pairings;  // B(pi A21, pi A31), B(pi A21, pi A32), B(pi A31, pi A32)
  bool sign_pattern_consistent = false;  // (v, -v, v)
  bool injective_mod2 = false;
};

MonomorphismWitness monomorphism_witness_3();

}  // namespace braidtop::heisenberg

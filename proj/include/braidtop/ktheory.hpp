#pragma once

#include "braidtop/numeric.hpp"

#include <string>
#include <vector>

namespace braidtop::ktheory {

/// Finitely generated abelian group of the shape Z^a + (Z/2)^b; every torsion
/// group arising from the Bott table here is 2-torsion.
struct AbelianGroupDescriptor {
  Int free_rank = 0;
  Int two_torsion_rank = 0;

  bool is_trivial() const { return free_rank == 0 && two_torsion_rank == 0; }

  friend bool operator==(const AbelianGroupDescriptor& a, const AbelianGroupDescriptor& b) {
    return a.free_rank == b.free_rank && a.two_torsion_rank == b.two_torsion_rank;
  }
};

enum class BottGroup { Zero, Z, Z2 };

/// Homotopy of the infinite orthogonal classifying space, period eight:
/// q mod 8 = 1, 2 -> Z/2; 4, 0 -> Z; else 0.  Requires q >= 1.
BottGroup bott_pi_bo(long q);

/// Homotopy of the infinite unitary classifying space, period two:
/// even q -> Z, odd q -> 0.  Requires q >= 1.
BottGroup bott_pi_bu(long q);

/// Reduced complex K-theory from Betti numbers b_0..b_l of a torsion-free
/// space: one Z per even-degree class above degree zero.
AbelianGroupDescriptor ku0(const std::vector<Int>& betti);

/// Reduced real K-theory: sum of Hom(H_q, pi_q BO) over q >= 1.
AbelianGroupDescriptor ko0(const std::vector<Int>& betti);

/// Subgroup of KO^0 generated by real representations: H^1(-, Z/2) + H^2(-, Z/2),
/// i.e. (Z/2)^(b_1 + b_2) when the integral homology is torsion free.
AbelianGroupDescriptor ko0_rep(const std::vector<Int>& betti);

/// Subgroup of KU^0 generated by unitary representations: always trivial for
/// homologically toroidal groups.
AbelianGroupDescriptor ku0_rep();

/// "Z^2", "(Z/2)^5", "Z + (Z/2)^3", "0"; exponent 1 is omitted.
std::string format_group(const AbelianGroupDescriptor& g);

}  // namespace braidtop::ktheory

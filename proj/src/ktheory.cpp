#include "braidtop/ktheory.hpp"

#include <stdexcept>

namespace braidtop::ktheory {

BottGroup bott_pi_bo(long q) {
  if (q < 1) throw std::invalid_argument("Bott lookup needs q >= 1");
  // Bott's table for pi_q BO, period eight starting at q = 1:
  // Z/2, Z/2, 0, Z, 0, 0, 0, Z.
  switch (q % 8) {
    case 1:
    case 2:
      return BottGroup::Z2;
    case 4:
    case 0:
      return BottGroup::Z;
    default:
      return BottGroup::Zero;
  }
}

BottGroup bott_pi_bu(long q) {
  if (q < 1) throw std::invalid_argument("Bott lookup needs q >= 1");
  return q % 2 == 0 ? BottGroup::Z : BottGroup::Zero;
}

namespace {

AbelianGroupDescriptor sum_hom(const std::vector<Int>& betti, BottGroup (*pi)(long)) {
  AbelianGroupDescriptor out;
  for (std::size_t q = 1; q < betti.size(); ++q) {
    switch (pi(long(q))) {
      case BottGroup::Z:
        out.free_rank += betti[q];
        break;
      case BottGroup::Z2:
        out.two_torsion_rank += betti[q];
        break;
      case BottGroup::Zero:
        break;
    }
  }
  return out;
}

}  // namespace

AbelianGroupDescriptor ku0(const std::vector<Int>& betti) {
  return sum_hom(betti, bott_pi_bu);
}

AbelianGroupDescriptor ko0(const std::vector<Int>& betti) {
  return sum_hom(betti, bott_pi_bo);
}

AbelianGroupDescriptor ko0_rep(const std::vector<Int>& betti) {
  AbelianGroupDescriptor out;
  if (betti.size() > 1) out.two_torsion_rank += betti[1];
  if (betti.size() > 2) out.two_torsion_rank += betti[2];
  return out;
}

AbelianGroupDescriptor ku0_rep() { return {}; }

std::string format_group(const AbelianGroupDescriptor& g) {
  if (g.is_trivial()) return "0";
  std::string out;
  if (g.free_rank == 1)
    out = "Z";
  else if (g.free_rank > 1)
    out = "Z^" + g.free_rank.str();
  if (g.two_torsion_rank > 0) {
    if (!out.empty()) out += " + ";
    if (g.two_torsion_rank == 1)
      out += "Z/2";
    else
      out += "(Z/2)^" + g.two_torsion_rank.str();
  }
  return out;
}

}  // namespace braidtop::ktheory

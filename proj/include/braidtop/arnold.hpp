#pragma once

#include "braidtop/numeric.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace braidtop::arnold {

enum class Ring { Z, F2 };

/// Degree-1 generator A_{i,j} of the pure braid cohomology ring, 1 <= j < i <= n.
struct Gen {
  int i = 0;
  int j = 0;
  friend bool operator==(const Gen& a, const Gen& b) { return a.i == b.i && a.j == b.j; }
  friend bool operator<(const Gen& a, const Gen& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  }
};

/// Factors sorted by (i, j); admissible means the first indices are strictly
/// increasing, which for a sorted duplicate-free word is the same as saying
/// no two factors share a first index.
using Monomial = std::vector<Gen>;

bool is_admissible(const Monomial& m);

/// One summand of a formal word: integer coefficient times an arbitrary
/// ordered product of generators (unsorted, repetitions allowed).
struct RawTerm {
  Int coeff;
  std::vector<Gen> factors;
};

/// Element of the free exterior algebra on the A_{i,j}: monomials are sorted
/// and duplicate-free, but the three-term relation has not been applied.
struct ExteriorClass {
  int n = 0;
  Ring ring = Ring::Z;
  int degree = 0;
  std::map<Monomial, Int> terms;  // nonzero coefficients only

  friend bool operator==(const ExteriorClass& a, const ExteriorClass& b) {
    return a.n == b.n && a.ring == b.ring && a.degree == b.degree && a.terms == b.terms;
  }
};

/// Homogeneous element in the admissible normal form.
struct ArnoldClass {
  int n = 0;
  Ring ring = Ring::Z;
  int degree = 0;
  std::map<Monomial, Int> terms;  // admissible monomials, nonzero coefficients

  bool is_zero() const { return terms.empty(); }

  friend bool operator==(const ArnoldClass& a, const ArnoldClass& b) {
    return a.n == b.n && a.ring == b.ring && a.degree == b.degree && a.terms == b.terms;
  }
};

/// The class A_{i,j}.  Throws std::invalid_argument unless 1 <= j < i <= n.
ArnoldClass generator(int n, int i, int j, Ring ring = Ring::Z);

/// Anticommutative sort with sign and square killing, no three-term
/// rewriting.  All terms must be words of one common length over valid
/// generator indices.
ExteriorClass exterior_form(int n, Ring ring, int degree, const std::vector<RawTerm>& raw);

/// Normal form in the admissible basis.  Rewrites A_{i,j}A_{i,t} (j < t) to
/// A_{t,j}A_{i,t} - A_{t,j}A_{i,j}; terminates because the multiset of first
/// indices drops in the multiset order at each step.
ArnoldClass straighten(const ExteriorClass& e);
ArnoldClass straighten(int n, Ring ring, int degree, const std::vector<RawTerm>& raw);

/// Graded product; degrees add.  Throws std::invalid_argument on mismatched
/// n or ring.
ArnoldClass multiply(const ArnoldClass& a, const ArnoldClass& b);

/// Sum of two classes of the same n, ring, and degree.
ArnoldClass add(const ArnoldClass& a, const ArnoldClass& b);
ArnoldClass negate(const ArnoldClass& a);

/// All admissible degree-t monomials for n strands, lexicographically
/// ordered.  Empty for t < 0 or t > n-1; the single empty monomial for t = 0.
std::vector<Monomial> basis(int n, int t);

/// |basis(n, t)|, the t-th Betti number of the pure braid group on n strands.
long dim(int n, int t);

/// Coefficientwise reduction of a Z class to F2.
ArnoldClass reduce_mod2(const ArnoldClass& a);
ExteriorClass reduce_mod2(const ExteriorClass& e);

/// Text format: `A[i,j]` generators joined by `*`, terms joined by `+`/`-`,
/// optional leading integer coefficients, `0` for the zero class.
/// parse_class straightens, so parse/print round-trips normal forms.
ArnoldClass parse_class(int n, Ring ring, std::string_view text);
std::string class_str(const ArnoldClass& a);
std::string class_str(const ExteriorClass& e);
std::string monomial_str(const Monomial& m);

/// The word A_{i,j}A_{i,t} - A_{t,j}A_{i,t} + A_{t,j}A_{i,j} for j < t < i.
/// Its exterior form is nonzero but it straightens to zero.
std::vector<RawTerm> three_term_relator(int i, int t, int j);

}  // namespace braidtop::arnold

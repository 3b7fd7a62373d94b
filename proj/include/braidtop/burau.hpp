#pragma once

#include "braidtop/gaussian.hpp"
#include "braidtop/numeric.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace braidtop::burau {

/// Sparse Laurent polynomial over Z: exponent -> nonzero coefficient.
struct LaurentPoly {
  std::map<long, Int> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs == b.coeffs;
  }
};

LaurentPoly lp_const(Int c);
LaurentPoly lp_t(long exponent, Int coeff = Int(1));

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a);

/// Canonical form, ascending exponents: `1 - t + t^2`, `t^-1`, `2*t^3`, `0`.
std::string poly_str(const LaurentPoly& p);

/// Substitute t = value.  Needs value != 0 only when a negative exponent is
/// present; specialize() below enforces nonzero unconditionally.
GaussianRational eval_poly(const LaurentPoly& p, const GaussianRational& value);

struct LaurentMatrix {
  int size = 0;
  std::vector<std::vector<LaurentPoly>> entries;

  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
    return a.size == b.size && a.entries == b.entries;
  }
};

LaurentMatrix laurent_identity(int n);
LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentPoly determinant(const LaurentMatrix& m);

struct GaussianMatrix {
  int size = 0;
  std::vector<std::vector<GaussianRational>> entries;

  friend bool operator==(const GaussianMatrix& a, const GaussianMatrix& b) {
    return a.size == b.size && a.entries == b.entries;
  }
};

GaussianMatrix operator*(const GaussianMatrix& a, const GaussianMatrix& b);
GaussianRational determinant(GaussianMatrix m);

struct BraidLetter {
  int k = 0;     // generator index, 1 <= k <= strands-1
  int sign = 1;  // +1 or -1
  friend bool operator==(const BraidLetter& a, const BraidLetter& b) {
    return a.k == b.k && a.sign == b.sign;
  }
};

struct BraidWord {
  int strands = 2;
  std::vector<BraidLetter> letters;
};

/// Whitespace-separated letters `s<k>` or `s<k>^-1`; k in 1..strands-1.
BraidWord parse_braid_word(int strands, std::string_view text);
std::string word_str(const BraidWord& w);

/// The unreduced Burau matrix of one generator: identity except for the
/// 2x2 block [[1-t, t], [1, 0]] at rows/columns k, k+1.  sign = -1 gives the
/// exact closed-form inverse block [[0, 1], [t^-1, 1 - t^-1]].
LaurentMatrix burau_generator(int n, int k, int sign = 1);

/// Product of generator matrices in word order; empty word gives identity.
LaurentMatrix burau(const BraidWord& word);

/// Substitute t = value into every entry; value must be nonzero.
GaussianMatrix specialize(const LaurentMatrix& m, const GaussianRational& value);

/// Braid and far-commutation relations, verified symbolically.
bool check_braid_relations(int n);

/// Permutation of {0..n-1}; images[j] is the image of j.  The permutation
/// matrix convention is column j carrying e_j to e_{images[j]}, so matrix
/// products compose left factor after right factor.
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);
  int size() const { return int(images.size()); }
  int operator()(int j) const { return images.at(std::size_t(j)); }
  /// this after first: j -> this(first(j)).
  Permutation after(const Permutation& first) const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images == b.images;
  }
};

/// Cycle notation with 1-based entries: `(1 2)(3 4)`, `()` for the identity.
/// Fixed points are omitted when printing; parse accepts spaces or commas
/// inside cycles and validates disjointness and range.
Permutation parse_cycles(int n, std::string_view text);
std::string cycle_str(const Permutation& p);

/// The word's image in the symmetric group, read off the t = 1
/// specialization; verifies that the specialized matrix is a permutation
/// matrix (std::logic_error otherwise).
Permutation permutation_at_1(const BraidWord& word);

/// Vandermonde data for a configuration of pairwise-distinct points.
/// Throws std::invalid_argument on repeated points.
GaussianRational vandermonde_det(const std::vector<GaussianRational>& points);

/// y_i = sum_j z_j^{i-1} x_j: the linear trivialization attached to the
/// configuration z.  The i/j placement is the transpose of a naive reading;
/// it is the unique one under which simultaneous permutation of (z, x)
/// leaves y fixed, which is the property checked below.
std::vector<GaussianRational> vandermonde_apply(const std::vector<GaussianRational>& points,
                                                const std::vector<GaussianRational>& x);

/// True iff the Vandermonde matrix of `points` is invertible and applying
/// the trivialization after permuting (z, x) simultaneously by `perm`
/// reproduces the same y exactly.
bool vandermonde_trivialization_check(const std::vector<GaussianRational>& points,
                                      const Permutation& perm,
                                      const std::vector<GaussianRational>& x);

}  // namespace braidtop::burau

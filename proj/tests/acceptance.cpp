// Acceptance gate: one line per criterion, exit 0 iff all pass.

#include "braidtop/arnold.hpp"
#include "braidtop/arrangement.hpp"
#include "braidtop/burau.hpp"
#include "braidtop/char_classes.hpp"
#include "braidtop/cli.hpp"
#include "braidtop/heisenberg.hpp"
#include "braidtop/ktheory.hpp"

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace braidtop;

namespace {

std::vector<Int> product_coefficients(int n) {
  std::vector<Int> coeffs{1};
  for (int k = 1; k < n; ++k) {
    std::vector<Int> next(coeffs.size() + 1, Int(0));
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
      next[d] += coeffs[d];
      next[d + 1] += coeffs[d] * k;
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

std::string bracket_list(const std::vector<Int>& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += v[k].str();
  }
  return out + "]";
}

// 1. Poset pipeline: CLI Betti output matches the product expansion for
//    n = 2..6 and the six-strand poset has the Bell number of flats.
bool poincare_pipeline() {
  bool ok = true;
  for (int n = 2; n <= 6; ++n) {
    std::ostringstream out, err;
    int code = cli::run({"betti", "--braid", std::to_string(n)}, out, err);
    ok = ok && code == 0 && out.str() == bracket_list(product_coefficients(n)) + "\n";
  }
  auto poset = intersection_poset(arrangement::braid_arrangement(6));
  ok = ok && poset.flats.size() == 203;
  return ok;
}

// 2. Arnold algebra dimensions against the same coefficients; the three-term
//    relator straightens to zero over both rings for every triple.
bool arnold_dimensions() {
  bool ok = true;
  for (int n = 2; n <= 7; ++n) {
    std::vector<Int> coeffs = product_coefficients(n);
    for (int t = 0; t <= 6; ++t) {
      Int expect = t < int(coeffs.size()) ? coeffs[std::size_t(t)] : Int(0);
      ok = ok && Int(arnold::dim(n, t)) == expect;
    }
  }
  for (int n = 3; n <= 6; ++n)
    for (int i = 3; i <= n; ++i)
      for (int t = 2; t < i; ++t)
        for (int j = 1; j < t; ++j) {
          auto raw = arnold::three_term_relator(i, t, j);
          ok = ok && arnold::straighten(n, arnold::Ring::Z, 2, raw).is_zero();
          ok = ok && arnold::straighten(n, arnold::Ring::F2, 2, raw).is_zero();
        }
  return ok;
}

bool oracle_trivial(const sw::ToralRep& rep) {
  std::vector<std::uint64_t> rows;
  for (std::uint64_t r : rep.rows)
    if (r != 0) rows.push_back(r);
  for (std::uint64_t r : rows) {
    std::size_t count = 0;
    for (std::uint64_t s : rows) count += std::size_t(s == r);
    if (count % 2 != 0) return false;
  }
  return true;
}

// 3. Stable triviality against the even-multiplicity oracle: exhaustive for
//    q <= 4, n <= 3, then ten thousand random samples for q <= 6, n <= 5.
bool sw_oracle() {
  for (int n = 1; n <= 3; ++n)
    for (int q = 0; q <= 4; ++q) {
      std::uint64_t total = 1ULL << (q * n);
      for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<std::uint64_t> rows;
        for (int r = 0; r < q; ++r) rows.push_back(code >> (r * n) & ((1ULL << n) - 1));
        sw::ToralRep rep = sw::make_rep(n, rows);
        if (is_stably_trivial(rep) != oracle_trivial(rep)) return false;
      }
    }
  std::mt19937_64 rng(424203);
  for (int trial = 0; trial < 10000; ++trial) {
    int n = 1 + int(rng() % 5);
    int q = int(rng() % 7);
    std::vector<std::uint64_t> rows;
    for (int r = 0; r < q; ++r) rows.push_back(rng() & ((1ULL << n) - 1));
    sw::ToralRep rep = sw::make_rep(n, rows);
    if (is_stably_trivial(rep) != oracle_trivial(rep)) return false;
  }
  return true;
}

// 4. Closed formulas for the coordinate representations: w1 is the sum of the
//    monomial's generators, w2 the pairwise sum; the determinant-one variant
//    kills w1 and keeps w2.
bool alpha_beta_formulas() {
  for (int strands = 4; strands <= 5; ++strands) {
    int columns = strands * (strands - 1) / 2;
    for (int t = 0; t < strands; ++t)
      for (const arnold::Monomial& m : arnold::basis(strands, t)) {
        std::vector<std::uint64_t> bits;
        for (const arnold::Gen& g : m)
          bits.push_back(1ULL << sw::pair_index(strands, g.i, g.j));

        sw::F2Class w1_expect{columns, 1, {}};
        for (std::uint64_t b : bits) {
          auto [it, fresh] = w1_expect.terms.insert(b);
          if (!fresh) w1_expect.terms.erase(it);
        }
        sw::F2Class w2_expect{columns, 2, {}};
        for (std::size_t a = 0; a < bits.size(); ++a)
          for (std::size_t b = a + 1; b < bits.size(); ++b) {
            auto [it, fresh] = w2_expect.terms.insert(bits[a] | bits[b]);
            if (!fresh) w2_expect.terms.erase(it);
          }

        sw::ToralRep alpha = sw::alpha_rep(strands, m);
        sw::ToralRep beta = sw::beta_rep(strands, m);
        if (!(sw_total(alpha, 1) == w1_expect)) return false;
        if (!(sw_total(alpha, 2) == w2_expect)) return false;
        if (!sw_total(beta, 1).is_zero()) return false;
        if (!(sw_total(beta, 2) == w2_expect)) return false;
      }
  }
  return true;
}

// 5. realize_sw reproduces one hundred random (zeta1, zeta2) pairs exactly.
bool realize_round_trip() {
  std::mt19937_64 rng(424205);
  for (int trial = 0; trial < 100; ++trial) {
    int strands = 4 + trial % 2;
    auto random_class = [&](int degree) {
      arnold::ArnoldClass c{strands, arnold::Ring::F2, degree, {}};
      for (const arnold::Monomial& m : arnold::basis(strands, degree))
        if (rng() % 2) c.terms[m] = 1;
      return c;
    };
    arnold::ArnoldClass zeta1 = random_class(1);
    arnold::ArnoldClass zeta2 = random_class(2);
    sw::ToralRep rep = sw::realize_sw(strands, zeta1, zeta2);  // throws on internal mismatch
    arnold::ArnoldClass w1 = to_arnold(strands, sw_total(rep, 1));
    arnold::ArnoldClass w2 = to_arnold(strands, sw_total(rep, 2));
    if (zeta1.is_zero() ? !w1.is_zero() : w1.terms != zeta1.terms) return false;
    if (zeta2.is_zero() ? !w2.is_zero() : w2.terms != zeta2.terms) return false;
  }
  return true;
}

// 6. Heisenberg pullbacks equal the three-term relator with exact signs,
//    straighten to zero, and the degree-1 images span everything.
bool heisenberg_lemma() {
  bool ok = true;
  for (int n = 3; n <= 6; ++n) {
    heisenberg::LiftReport report = heisenberg::verify_all_lifts(n);
    long expected_triples = long(n) * (n - 1) * (n - 2) / 6;
    ok = ok && long(report.triples.size()) == expected_triples;
    ok = ok && report.all_zero && report.degree1_spans;
    for (int i = 3; i <= n; ++i)
      for (int t = 2; t < i; ++t)
        for (int j = 1; j < t; ++j) {
          arnold::ExteriorClass pulled = heisenberg::pullback_chi(n, i, t, j);
          ok = ok && pulled == arnold::exterior_form(n, arnold::Ring::Z, 2,
                                                     arnold::three_term_relator(i, t, j));
          ok = ok && straighten(pulled).is_zero();
        }
  }
  return ok;
}

burau::BraidWord random_word(int strands, int len, std::mt19937_64& rng) {
  burau::BraidWord w;
  w.strands = strands;
  for (int i = 0; i < len; ++i)
    w.letters.push_back(burau::BraidLetter{1 + int(rng() % (strands - 1)),
                                           (rng() % 2) ? 1 : -1});
  return w;
}

// 0-based image vector of the word's permutation, composed letter by letter.
std::vector<int> word_permutation(const burau::BraidWord& w) {
  std::vector<int> img(std::size_t(w.strands));
  for (int j = 0; j < w.strands; ++j) {
    int v = j;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      if (v == it->k - 1)
        v = it->k;
      else if (v == it->k)
        v = it->k - 1;
    }
    img[std::size_t(j)] = v;
  }
  return img;
}

// 7. Burau: symbolic braid relations, determinant identity, and the t = 1
//    permutation matrix on random words.
bool burau_checks() {
  for (int n = 2; n <= 5; ++n)
    if (!burau::check_braid_relations(n)) return false;

  std::mt19937_64 rng(424207);
  GaussianRational one{Rational(1), Rational(0)};
  GaussianRational zero{Rational(0), Rational(0)};
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + int(rng() % 4);
    burau::BraidWord w = random_word(n, int(rng() % 13), rng);
    burau::LaurentMatrix m = burau::burau(w);

    long exp_sum = 0;
    for (const burau::BraidLetter& l : w.letters) exp_sum += l.sign;
    burau::LaurentPoly expect = burau::lp_t(exp_sum, (exp_sum % 2 != 0) ? Int(-1) : Int(1));
    if (!(determinant(m) == expect)) return false;

    std::vector<int> img = word_permutation(w);
    burau::GaussianMatrix at1 = specialize(m, one);
    for (int c = 0; c < n; ++c)
      for (int r = 0; r < n; ++r)
        if (!(at1.entries[std::size_t(r)][std::size_t(c)] ==
              (img[std::size_t(c)] == r ? one : zero)))
          return false;
    if (!(permutation_at_1(w).images == img)) return false;
  }
  return true;
}

// 8. Vandermonde equivariance on one hundred random exact configurations.
bool vandermonde_equivariance() {
  std::mt19937_64 rng(424208);
  std::uniform_int_distribution<int> num(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + int(rng() % 7);
    std::vector<GaussianRational> z;
    while (int(z.size()) < n) {
      GaussianRational cand{Rational(num(rng), 1 + int(rng() % 3)),
                            Rational(num(rng), 1 + int(rng() % 3))};
      bool dup = false;
      for (const auto& p : z) dup = dup || p == cand;
      if (!dup) z.push_back(cand);
    }
    std::vector<GaussianRational> x;
    for (int i = 0; i < n; ++i)
      x.push_back(GaussianRational{Rational(num(rng)), Rational(num(rng))});
    std::vector<int> images(std::size_t(n), 0);
    for (int i = 0; i < n; ++i) images[std::size_t(i)] = i;
    std::shuffle(images.begin(), images.end(), rng);

    if (burau::vandermonde_det(z).is_zero()) return false;
    if (!burau::vandermonde_trivialization_check(z, burau::Permutation{images}, x)) return false;
  }
  return true;
}

// 9. K-theory values for the three-strand pure braid group and the rank-three
//    coordinate arrangement.
bool ktheory_values() {
  std::vector<Int> p3 = arrangement::betti_numbers(arrangement::braid_arrangement(3));
  bool ok = format_group(ktheory::ku0(p3)) == "Z^2";
  ok = ok && format_group(ktheory::ko0(p3)) == "(Z/2)^5";
  ok = ok && format_group(ktheory::ko0_rep(p3)) == "(Z/2)^5";
  ok = ok && format_group(ktheory::ku0_rep()) == "0";
  std::vector<Int> b3 = arrangement::betti_numbers(arrangement::boolean_arrangement(3));
  ok = ok && format_group(ktheory::ku0(b3)) == "Z^3";

  std::ostringstream out, err;
  int code = cli::run({"ktheory", "--braid", "3"}, out, err);
  ok = ok && code == 0 &&
       out.str().rfind("KU^0 = Z^2, KO^0 = (Z/2)^5, KO^0_rep = (Z/2)^5, KU^0_rep = 0\n", 0) == 0;
  return ok;
}

struct Criterion {
  const char* label;
  bool (*check)();
  double time_limit;  // seconds, 0 = no limit
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"Poincare polynomial pipeline, braid 2..6, Bell(6) flats", poincare_pipeline, 10.0},
      {"Arnold dimensions n <= 7, relator straightens to zero", arnold_dimensions, 0.0},
      {"Stiefel-Whitney triviality vs even-multiplicity oracle", sw_oracle, 60.0},
      {"alpha/beta closed formulas on 4 and 5 strands", alpha_beta_formulas, 0.0},
      {"realize_sw round-trips 100 random class pairs", realize_round_trip, 0.0},
      {"Heisenberg pullback equals the relator, span full", heisenberg_lemma, 0.0},
      {"Burau relations, determinant, permutation at t = 1", burau_checks, 0.0},
      {"Vandermonde equivariance on 100 exact configurations", vandermonde_equivariance, 0.0},
      {"K-theory of the three-strand group and coordinate planes", ktheory_values, 0.0},
  };

  int passed = 0;
  int number = 0;
  for (const Criterion& c : criteria) {
    ++number;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.check();
    } catch (const std::exception& e) {
      std::cout << "criterion " << number << ": exception: " << e.what() << "\n";
      ok = false;
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && seconds >= c.time_limit) ok = false;
    std::cout << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << "  " << c.label;
    std::cout.setf(std::ios::fixed);
    std::cout.precision(2);
    std::cout << " (" << seconds << "s";
    if (c.time_limit > 0) std::cout << " of " << c.time_limit << "s allowed";
    std::cout << ")\n";
    passed += ok;
  }
  std::cout << "acceptance: " << passed << " of " << std::size(criteria) << " criteria passed\n";
  return passed == int(std::size(criteria)) ? 0 : 1;
}

#include "braidtop/heisenberg.hpp"

#include "braidtop/char_classes.hpp"

#include <stdexcept>
#include <string>

namespace braidtop::heisenberg {

namespace {

LinearMap zero_map(int target, int source) {
  return LinearMap{source, target,
                   std::vector<std::vector<Int>>(target, std::vector<Int>(source, Int(0)))};
}

void check_triple(int n, int i, int t, int j) {
  if (!(1 <= j && j < t && t < i && i <= n))
    throw std::invalid_argument("triple must satisfy 1 <= j < t < i <= n, got (" +
                                std::to_string(i) + ", " + std::to_string(t) + ", " +
                                std::to_string(j) + ") with n = " + std::to_string(n));
}

// Symplectic pairing of the class u1 u2 + u3 u4 + u5 u6 on rank 6.
Int symplectic(const std::vector<Int>& v, const std::vector<Int>& w) {
  Int out = 0;
  for (int r = 0; r < 6; r += 2) out += v[r] * w[r + 1] - v[r + 1] * w[r];
  return out;
}

// Rank over F2 of dense 0/1 rows.
int f2_rank(std::vector<std::vector<char>> rows) {
  int rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot][c]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[std::size_t(rank)]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != std::size_t(rank) && rows[r][c])
        for (std::size_t k = c; k < cols; ++k) rows[r][k] = char(rows[r][k] ^ rows[std::size_t(rank)][k]);
    ++rank;
  }
  return rank;
}

}  // namespace

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  if (f.source != g.target) throw std::invalid_argument("composition rank mismatch");
  LinearMap out = zero_map(f.target, g.source);
  for (int r = 0; r < f.target; ++r)
    for (int m = 0; m < f.source; ++m) {
      if (f.matrix[r][m] == 0) continue;
      for (int c = 0; c < g.source; ++c) out.matrix[r][c] += f.matrix[r][m] * g.matrix[m][c];
    }
  return out;
}

std::vector<Int> apply(const LinearMap& f, const std::vector<Int>& v) {
  if (int(v.size()) != f.source) throw std::invalid_argument("vector rank mismatch");
  std::vector<Int> out(std::size_t(f.target), Int(0));
  for (int r = 0; r < f.target; ++r)
    for (int c = 0; c < f.source; ++c) out[std::size_t(r)] += f.matrix[r][c] * v[std::size_t(c)];
  return out;
}

LinearMap p_map(int n, int i, int t, int j) {
  check_triple(n, i, t, j);
  int pairs = n * (n - 1) / 2;
  LinearMap out = zero_map(3, pairs);
  out.matrix[0][sw::pair_index(n, i, j)] = 1;
  out.matrix[1][sw::pair_index(n, i, t)] = 1;
  out.matrix[2][sw::pair_index(n, t, j)] = 1;
  return out;
}

LinearMap delta_map() {
  LinearMap out = zero_map(6, 3);
  out.matrix[0][0] = 1;
  out.matrix[1][0] = -1;
  out.matrix[2][1] = 1;
  out.matrix[3][1] = 1;
  out.matrix[4][2] = 1;
  out.matrix[5][2] = 1;
  return out;
}

LinearMap sigma_map() {
  LinearMap out = zero_map(6, 6);
  int images[6] = {0, 2, 1, 4, 3, 5};  // coordinate r of the output reads input images[r]
  for (int r = 0; r < 6; ++r) out.matrix[r][images[r]] = 1;
  return out;
}

LinearMap pi_map(int n, int i, int t, int j) {
  return compose(sigma_map(), compose(delta_map(), p_map(n, i, t, j)));
}

arnold::ExteriorClass pullback_chi(int n, int i, int t, int j) {
  LinearMap pi = pi_map(n, i, t, j);
  std::vector<arnold::RawTerm> raw;
  for (int r = 0; r < 6; r += 2)
    for (int c = 0; c < pi.source; ++c) {
      if (pi.matrix[r][c] == 0) continue;
      for (int d = 0; d < pi.source; ++d) {
        if (pi.matrix[r + 1][d] == 0 || c == d) continue;
        raw.push_back(arnold::RawTerm{pi.matrix[r][c] * pi.matrix[r + 1][d],
                                      {sw::pair_of_index(n, c), sw::pair_of_index(n, d)}});
      }
    }
  return arnold::exterior_form(n, arnold::Ring::Z, 2, raw);
}

LiftReport verify_all_lifts(int n) {
  if (n < 3) throw std::invalid_argument("need at least three strands for a triple");
  int pairs = n * (n - 1) / 2;
  LiftReport report;
  report.n = n;
  report.all_zero = true;
  std::vector<std::vector<char>> degree1_rows;
  for (int i = 3; i <= n; ++i)
    for (int t = 2; t < i; ++t)
      for (int j = 1; j < t; ++j) {
        arnold::ExteriorClass pulled = pullback_chi(n, i, t, j);
        TripleStatus status{i, t, j, straighten(pulled).is_zero(),
                            straighten(reduce_mod2(pulled)).is_zero()};
        report.all_zero = report.all_zero && status.obstruction_zero && status.obstruction_zero_mod2;
        report.triples.push_back(status);
        for (auto [a, b] : {std::pair{i, j}, std::pair{i, t}, std::pair{t, j}}) {
          std::vector<char> row(std::size_t(pairs), 0);
          row[std::size_t(sw::pair_index(n, a, b))] = 1;
          degree1_rows.push_back(std::move(row));
        }
      }
  report.degree1_span_dim = f2_rank(std::move(degree1_rows));
  report.degree1_spans = report.degree1_span_dim == pairs;
  return report;
}

MonomorphismWitness monomorphism_witness_3() {
  LinearMap pi = pi_map(3, 3, 2, 1);
  std::vector<std::vector<Int>> images;  // of A21, A31, A32 in source order
  for (int c = 0; c < 3; ++c) {
    std::vector<Int> col;
    for (int r = 0; r < 6; ++r) col.push_back(pi.matrix[r][c]);
    images.push_back(std::move(col));
  }
  std::vector<std::vector<char>> cols_mod2;
  for (const auto& col : images) {
    std::vector<char> bits;
    for (const Int& e : col) bits.push_back(char(!is_even(e)));
    cols_mod2.push_back(std::move(bits));
  }

  MonomorphismWitness w;
  w.abelianization_rank_mod2 = f2_rank(std::move(cols_mod2));
  w.commutator_pairings = {symplectic(images[0], images[1]), symplectic(images[0], images[2]),
                           symplectic(images[1], images[2])};
  const auto& p = w.commutator_pairings;
  w.sign_pattern_consistent = p[0] == -p[1] && p[0] == p[2];
  w.injective_mod2 = w.abelianization_rank_mod2 == 3 && w.sign_pattern_consistent && !is_even(p[0]);
  return w;
}

}  // namespace braidtop::heisenberg

#include "doctest.h"

#include "braidtop/char_classes.hpp"

#include <map>
#include <random>

using namespace braidtop;
using namespace braidtop::sw;

namespace {

// Wedge product of two F2 exterior classes, used to state Whitney formulas
// independently of the library's symmetric-polynomial recurrence.
F2Class wedge(const F2Class& a, const F2Class& b) {
  F2Class out{a.n, a.degree + b.degree, {}};
  for (std::uint64_t x : a.terms)
    for (std::uint64_t y : b.terms) {
      if (x & y) continue;
      std::uint64_t m = x | y;
      if (!out.terms.insert(m).second) out.terms.erase(m);
    }
  return out;
}

F2Class plus(const F2Class& a, const F2Class& b) {
  F2Class out = a;
  for (std::uint64_t y : b.terms)
    if (!out.terms.insert(y).second) out.terms.erase(y);
  return out;
}

// The even-multiplicity oracle: every nonzero row value occurs an even
// number of times.
bool oracle_trivial(const ToralRep& rep) {
  std::map<std::uint64_t, int> counts;
  for (std::uint64_t r : rep.rows)
    if (r != 0) ++counts[r];
  for (const auto& [row, count] : counts)
    if (count % 2) return false;
  return true;
}

ToralRep random_rep(int max_q, int max_n, std::mt19937_64& rng) {
  int q = int(rng() % (max_q + 1));
  int n = 1 + int(rng() % max_n);
  std::vector<std::uint64_t> rows;
  for (int i = 0; i < q; ++i) rows.push_back(rng() & ((1ULL << n) - 1));
  return make_rep(n, std::move(rows));
}

arnold::ArnoldClass random_f2_class(int strands, int degree, std::mt19937_64& rng) {
  std::vector<arnold::RawTerm> raw;
  for (const arnold::Monomial& m : arnold::basis(strands, degree))
    if (rng() % 2) raw.push_back(arnold::RawTerm{Int(1), m});
  return arnold::straighten(strands, arnold::Ring::F2, degree, raw);
}

}  // namespace

TEST_CASE("pinned symmetric polynomial values") {
  ToralRep two_lines = make_rep(2, {0b01, 0b10});
  CHECK(f2_str(sw_total(two_lines, 2)) == "e1*e2");
  CHECK(f2_str(sw_total(two_lines, 1)) == "e1 + e2");
  CHECK(f2_str(sw_total(two_lines, 0)) == "1");
  CHECK(sw_total(two_lines, 3).is_zero());
  CHECK_THROWS_AS(sw_total(two_lines, -1), std::invalid_argument);

  ToralRep doubled = make_rep(1, {1, 1});
  CHECK(sw_total(doubled, 1).is_zero());
  CHECK(sw_total(doubled, 2).is_zero());

  ToralRep triangle = make_rep(2, {0b01, 0b10, 0b11});
  CHECK(sw_total(triangle, 1).is_zero());
  CHECK(f2_str(sw_total(triangle, 2)) == "e1*e2");
}

TEST_CASE("pinned triviality verdicts") {
  CHECK(is_stably_trivial(make_rep(1, {1, 1})));
  CHECK_FALSE(is_stably_trivial(make_rep(2, {0b01, 0b10, 0b11})));
  CHECK(is_stably_trivial(make_rep(3, {})));
}

TEST_CASE("pairing witness pins") {
  PairingWitness w = pairing_witness(make_rep(2, {0b01, 0b10, 0b10, 0b01}));
  REQUIRE(w.trivial);
  CHECK(w.pairs == std::vector<std::pair<int, int>>{{0, 3}, {1, 2}});
  CHECK(w.zero_rows.empty());

  w = pairing_witness(make_rep(2, {0b11, 0b11, 0}));
  REQUIRE(w.trivial);
  CHECK(w.pairs == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(w.zero_rows == std::vector<int>{2});

  w = pairing_witness(make_rep(2, {0b01, 0b10, 0b11}));
  REQUIRE_FALSE(w.trivial);
  CHECK(w.obstruction_degree == 2);
  CHECK(f2_str(w.obstruction) == "e1*e2");

  w = pairing_witness(make_rep(2, {0b01}));
  REQUIRE_FALSE(w.trivial);
  CHECK(w.obstruction_degree == 1);
  CHECK(f2_str(w.obstruction) == "e1");
}

TEST_CASE("exhaustive agreement with the even multiplicity oracle") {
  for (int n = 0; n <= 3; ++n) {
    for (int q = 0; q <= 4; ++q) {
      std::uint64_t per_row = 1ULL << n;
      std::uint64_t total = 1;
      for (int i = 0; i < q; ++i) total *= per_row;
      for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        std::vector<std::uint64_t> rows;
        for (int i = 0; i < q; ++i) {
          rows.push_back(c % per_row);
          c /= per_row;
        }
        ToralRep rep = make_rep(n, std::move(rows));
        bool expect = oracle_trivial(rep);
        REQUIRE(is_stably_trivial(rep) == expect);

        PairingWitness w = pairing_witness(rep);
        REQUIRE(w.trivial == expect);
        if (w.trivial) {
          std::vector<bool> seen(rep.rows.size(), false);
          for (auto [a, b] : w.pairs) {
            REQUIRE(rep.rows[a] == rep.rows[b]);
            REQUIRE(rep.rows[a] != 0);
            REQUIRE_FALSE(seen[a]);
            REQUIRE_FALSE(seen[b]);
            seen[a] = seen[b] = true;
          }
          for (int z : w.zero_rows) {
            REQUIRE(rep.rows[z] == 0);
            REQUIRE_FALSE(seen[z]);
            seen[z] = true;
          }
          for (bool s : seen) REQUIRE(s);
        } else {
          REQUIRE_FALSE(w.obstruction.is_zero());
          REQUIRE(w.obstruction.terms == sw_total(rep, w.obstruction_degree).terms);
          if (w.obstruction_degree == 2) REQUIRE(sw_total(rep, 1).is_zero());
        }
      }
    }
  }
}

TEST_CASE("whitney formula through degree two") {
  std::mt19937_64 rng(88001);
  for (int trial = 0; trial < 200; ++trial) {
    ToralRep a = random_rep(6, 5, rng);
    ToralRep b = random_rep(6, 5, rng);
    b.n = a.n;  // align columns
    for (auto& r : b.rows) r &= (a.n == 64 ? ~0ULL : (1ULL << a.n) - 1);
    b = make_rep(a.n, b.rows);
    ToralRep s = whitney_sum(a, b);

    CHECK(sw_total(s, 1).terms == plus(sw_total(a, 1), sw_total(b, 1)).terms);
    F2Class w2 = plus(plus(sw_total(a, 2), sw_total(b, 2)),
                      wedge(sw_total(a, 1), sw_total(b, 1)));
    CHECK(sw_total(s, 2).terms == w2.terms);

    // Squares of degree-1 classes vanish.
    CHECK(wedge(sw_total(a, 1), sw_total(a, 1)).is_zero());
  }
}

TEST_CASE("doubling any representation is stably trivial") {
  std::mt19937_64 rng(88002);
  for (int trial = 0; trial < 300; ++trial) {
    ToralRep r = random_rep(6, 5, rng);
    CHECK(is_stably_trivial(whitney_sum(r, r)));
  }
}

TEST_CASE("randomized oracle agreement on larger shapes") {
  std::mt19937_64 rng(88003);
  for (int trial = 0; trial < 2000; ++trial) {
    ToralRep r = random_rep(6, 5, rng);
    CHECK(is_stably_trivial(r) == oracle_trivial(r));
  }
}

TEST_CASE("pair index enumeration") {
  CHECK(pair_index(4, 2, 1) == 0);
  CHECK(pair_index(4, 3, 1) == 1);
  CHECK(pair_index(4, 3, 2) == 2);
  CHECK(pair_index(4, 4, 1) == 3);
  for (int strands = 2; strands <= 8; ++strands) {
    int count = strands * (strands - 1) / 2;
    for (int idx = 0; idx < count; ++idx) {
      arnold::Gen g = pair_of_index(strands, idx);
      CHECK(pair_index(strands, g.i, g.j) == idx);
    }
  }
  CHECK_THROWS_AS(pair_index(4, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(pair_of_index(4, 6), std::invalid_argument);
}

TEST_CASE("projection representation classes") {
  using arnold::Gen;
  using arnold::Monomial;

  ToralRep a = alpha_rep(3, Monomial{Gen{2, 1}});
  CHECK(a.q() == 1);
  CHECK(to_arnold(3, sw_total(a, 1)) == arnold::generator(3, 2, 1, arnold::Ring::F2));
  CHECK(to_arnold(3, sw_total(a, 2)).is_zero());

  ToralRep a2 = alpha_rep(3, Monomial{Gen{2, 1}, Gen{3, 2}});
  CHECK(arnold::class_str(to_arnold(3, sw_total(a2, 2))) == "A[2,1]*A[3,2]");

  ToralRep a0 = alpha_rep(3, Monomial{});
  CHECK(a0.q() == 0);
  CHECK(is_stably_trivial(a0));

  ToralRep b2 = beta_rep(3, Monomial{Gen{2, 1}, Gen{3, 2}});
  CHECK(b2.q() == 3);
  CHECK(b2.special_orthogonal);
  CHECK(sw_total(b2, 1).is_zero());
  CHECK(arnold::class_str(to_arnold(3, sw_total(b2, 2))) == "A[2,1]*A[3,2]");

  ToralRep b1 = beta_rep(3, Monomial{Gen{2, 1}});
  CHECK(b1.rows == std::vector<std::uint64_t>{1, 1});
  CHECK(is_stably_trivial(b1));

  ToralRep b0 = beta_rep(3, Monomial{});
  CHECK(b0.rows == std::vector<std::uint64_t>{0});
  CHECK(is_stably_trivial(b0));

  CHECK_THROWS_AS(alpha_rep(3, Monomial{Gen{3, 1}, Gen{3, 2}}), std::invalid_argument);
}

TEST_CASE("projection classes match the closed formulas on four strands") {
  for (int t = 0; t <= 3; ++t) {
    for (const arnold::Monomial& m : arnold::basis(4, t)) {
      std::vector<arnold::RawTerm> w1_raw, w2_raw;
      for (std::size_t k = 0; k < m.size(); ++k) {
        w1_raw.push_back(arnold::RawTerm{Int(1), {m[k]}});
        for (std::size_t l = k + 1; l < m.size(); ++l)
          w2_raw.push_back(arnold::RawTerm{Int(1), {m[k], m[l]}});
      }
      arnold::ArnoldClass w1 = arnold::straighten(4, arnold::Ring::F2, 1, w1_raw);
      arnold::ArnoldClass w2 = arnold::straighten(4, arnold::Ring::F2, 2, w2_raw);

      ToralRep a = alpha_rep(4, m);
      CHECK(to_arnold(4, sw_total(a, 1)).terms == w1.terms);
      CHECK(to_arnold(4, sw_total(a, 2)).terms == w2.terms);

      ToralRep b = beta_rep(4, m);
      CHECK(sw_total(b, 1).is_zero());
      CHECK(to_arnold(4, sw_total(b, 2)).terms == w2.terms);
      std::uint64_t parity = 0;
      for (std::uint64_t r : b.rows) parity ^= r;
      CHECK(parity == 0);
    }
  }
}

TEST_CASE("pinned realizations") {
  using arnold::parse_class;
  using arnold::Ring;

  ToralRep r1 = realize_sw(3, parse_class(3, Ring::F2, "A[2,1]"), parse_class(3, Ring::F2, "0"));
  CHECK(r1.q() == 1);
  CHECK(arnold::class_str(to_arnold(3, sw_total(r1, 1))) == "A[2,1]");

  ToralRep r2 =
      realize_sw(3, parse_class(3, Ring::F2, "0"), parse_class(3, Ring::F2, "A[2,1]*A[3,1]"));
  CHECK(r2.q() == 3);
  CHECK(r2.special_orthogonal);
  CHECK(sw_total(r2, 1).is_zero());

  ToralRep r3 = realize_sw(3, parse_class(3, Ring::F2, "A[3,2]"),
                           parse_class(3, Ring::F2, "A[2,1]*A[3,2] + A[2,1]*A[3,1]"));
  CHECK(r3.q() == 7);
}

TEST_CASE("realization round trip on random classes") {
  std::mt19937_64 rng(88004);
  for (int trial = 0; trial < 30; ++trial) {
    int strands = 4 + int(rng() % 2);
    arnold::ArnoldClass z1 = random_f2_class(strands, 1, rng);
    arnold::ArnoldClass z2 = random_f2_class(strands, 2, rng);
    ToralRep rep = realize_sw(strands, z1, z2);  // throws std::logic_error on mismatch
    arnold::ArnoldClass w1 = to_arnold(strands, sw_total(rep, 1));
    arnold::ArnoldClass w2 = to_arnold(strands, sw_total(rep, 2));
    CHECK(w1.terms == z1.terms);
    CHECK(w2.terms == z2.terms);
  }
}

TEST_CASE("realize_sw input validation") {
  using arnold::parse_class;
  using arnold::Ring;
  CHECK_THROWS_AS(realize_sw(3, parse_class(3, Ring::Z, "A[2,1]"), parse_class(3, Ring::Z, "0")),
                  std::invalid_argument);
  CHECK_THROWS_AS(realize_sw(3, parse_class(3, Ring::F2, "A[2,1]*A[3,1]"),
                             parse_class(3, Ring::F2, "0")),
                  std::invalid_argument);
  CHECK_THROWS_AS(realize_sw(4, parse_class(3, Ring::F2, "A[2,1]"),
                             parse_class(3, Ring::F2, "0")),
                  std::invalid_argument);
}

TEST_CASE("matrix file parsing") {
  ToralRep rep = parse_rep("# comment\n1 0 1\n0 1 1\n\n0 0 0\n");
  CHECK(rep.n == 3);
  CHECK(rep.rows == std::vector<std::uint64_t>{0b101, 0b110, 0});

  CHECK(parse_rep("").q() == 0);
  CHECK_THROWS_AS(parse_rep("1 0\n1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rep("1 2\n"), std::invalid_argument);

  try {
    parse_rep("1 0\n0 2\n");
    FAIL("expected error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("complex classes of representations vanish") {
  static_assert(ku_rep_is_trivial());
  CHECK(ku_rep_is_trivial());
}

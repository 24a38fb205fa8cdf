#include <doctest.h>

#include "../support/random.hpp"
#include "revsyn/group.hpp"
#include "revsyn/synth.hpp"

using namespace revsyn;

namespace {

// TOF(1;2;3) * TOF(1;2;5) on five lines.
const std::vector<Transposition> cube_h{{16, 21}, {17, 20}, {18, 23}, {19, 22}};

GroupMatrix matrix(int n, std::vector<std::uint32_t> rows) {
  GroupMatrix m;
  m.n = n;
  m.rows = std::move(rows);
  return m;
}

Permutation realized(const Circuit& c) { return Permutation::of(c); }

}  // namespace

TEST_CASE("identity synthesizes to nothing") {
  CHECK(synthesize(Permutation::identity(3)).empty());
  CHECK(synthesize(Permutation::identity(6)).empty());
}

TEST_CASE("the two-gate example comes back as a cube") {
  const Permutation h = Permutation::from_transpositions(5, cube_h);
  const Circuit c = synthesize(h);
  CHECK(realized(c) == h);
  CHECK(c.size() == 2);

  const auto hit = find_hypercube(5, cube_h);
  REQUIRE(hit.has_value());
  CHECK(hit->cube.fixed_positive == LineSet{1});
  CHECK(hit->cube.fixed_negative == LineSet{2});
  CHECK(hit->cube.toggles == LineSet{3, 5});
  CHECK(hit->gates == Circuit(5, {Gate(LineSet{1}, LineSet{2}, 3), Gate(LineSet{1}, LineSet{2}, 5)}));
  CHECK(hit->consumed.size() == 4);
}

TEST_CASE("hypercube special cases") {
  // x2 ^= x1 on two lines is the single pair (10, 11)
  {
    const std::vector<Transposition> pool{{2, 3}};
    const auto hit = find_hypercube(2, pool);
    REQUIRE(hit.has_value());
    CHECK(hit->gates == Circuit(2, {Gate(LineSet{1}, {}, 2)}));
  }
  // x2 ^= x1 on three lines: pairs (1 0 a, 1 1 a)
  {
    const std::vector<Transposition> pool{{4, 6}, {5, 7}};
    const auto hit = find_hypercube(3, pool);
    REQUIRE(hit.has_value());
    CHECK(hit->gates == Circuit(3, {Gate(LineSet{1}, {}, 2)}));
  }
  // a lone pair at distance 1 needs every other line as a control
  {
    const std::vector<Transposition> pool{{0b010, 0b011}};
    const auto hit = find_hypercube(3, pool);
    REQUIRE(hit.has_value());
    CHECK(hit->gates.size() == 1);
    CHECK(hit->gates[0].control_count() == 2);
  }
}

TEST_CASE("hypercube gates realize the consumed pairs") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 5;
    const Permutation p = testing::random_permutation(rng, n);
    std::vector<Transposition> pool;
    for (const auto& cyc : p.cycles())
      for (std::size_t i = 0; i < cyc.size(); ++i)
        for (std::size_t j = i + 1; j < cyc.size(); ++j) pool.emplace_back(cyc[i], cyc[j]);
    for (const auto& hit : hypercube_candidates(n, pool)) {
      CHECK(realized(hit.gates) == Permutation::from_transpositions(n, hit.consumed));
      CHECK(hit.gates.size() == static_cast<std::size_t>(hit.cube.toggles.size()));
    }
  }
}

TEST_CASE("matrix stages") {
  SUBCASE("duplicate columns") {
    const Conjugated z = zero_duplicate_columns(matrix(2, {0b11, 0b00}));
    CHECK(z.matrix.rows == std::vector<std::uint32_t>{0b10, 0b00});
    CHECK(z.conjugator == Circuit(2, {Gate::cnot(1, 2)}));
    const Conjugated none = zero_duplicate_columns(matrix(2, {0b10, 0b01}));
    CHECK(none.conjugator.empty());
  }
  SUBCASE("canonical form") {
    const Conjugated c = to_canonical_form(matrix(2, {0b00, 0b11}), 1);
    CHECK(c.matrix.rows == std::vector<std::uint32_t>{0b00, 0b10});
    CHECK(c.conjugator == Circuit(2, {Gate::cnot(1, 2)}));
    const Conjugated same = to_canonical_form(matrix(2, {0b00, 0b10}), 1);
    CHECK(same.conjugator.empty());
  }
  SUBCASE("final gate") {
    const GroupMatrix m = matrix(3, {0b100, 0b101, 0b110, 0b111});
    const FinalStage f = realize_final(m, LineSet{2, 3}, 3);
    CHECK(f.final_gate == Gate(LineSet{1}, {}, 3));
    CHECK(f.not_conjugator.empty());
    const FinalStage k1 = realize_final(matrix(2, {0b11, 0b10}), LineSet{2}, 2);
    CHECK(k1.final_gate == Gate(LineSet{1}, {}, 2));
    CHECK(k1.not_conjugator.empty());
  }
  SUBCASE("zeroed column gets a NOT") {
    const GroupMatrix m = matrix(3, {0b000, 0b001});
    const FinalStage f = realize_final(m, LineSet{3}, 3);
    CHECK(f.not_conjugator == Circuit(3, {Gate::not_gate(1), Gate::not_gate(2)}));
    Circuit c = f.not_conjugator;
    c.push_back(f.final_gate);
    c.append(f.not_conjugator.reversed());
    CHECK(realized(c) == Permutation::from_transpositions(3, std::vector<Transposition>{{0, 1}}));
    CHECK(final_gate_with_polarity(m, LineSet{3}, 3) == Gate({}, LineSet{1, 2}, 3));
  }
}

TEST_CASE("canonical form of random groups") {
  std::mt19937 rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 5;
    const Permutation p = testing::random_permutation(rng, n);
    const Grouping g = group_transpositions(p, 2);
    for (const auto& grp : g.groups) {
      const GroupMatrix m = build_matrix(n, grp);
      for (int t = 1; t <= n; ++t) {
        if (((m.rows[0] ^ m.rows[1]) & state_bit(t, n)) == 0) continue;
        try {
          const Conjugated c = to_canonical_form(m, t);
          for (std::size_t r = 0; r < m.rows.size(); ++r)
            CHECK(c.matrix.rows[r] == evaluate(c.conjugator, m.rows[r]));
          for (std::size_t r = 0; r < m.rows.size(); r += 2) CHECK((c.matrix.rows[r] ^ c.matrix.rows[r + 1]) == state_bit(t, n));
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::canonicalization_failed);
        }
      }
    }
  }
}

TEST_CASE("group realization matches the transpositions") {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 5;
    const Permutation p = testing::random_permutation(rng, n);
    const std::size_t k = 1 + static_cast<std::size_t>(trial % 3);
    for (const auto& grp : group_transpositions(p, k).groups)
      CHECK(realized(realize_group(n, grp)) == Permutation::from_transpositions(n, grp.members));
  }
}

TEST_CASE("wide gates decompose into Toffolis") {
  std::mt19937 rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + trial % 5;
    const Circuit c = testing::random_circuit(rng, n, 4);
    const Circuit d = decompose_to_nct(c);
    CHECK(realized(d) == realized(c));
    for (const Gate& g : d.gates()) {
      // only gates with no spare line are left wide
      if (g.control_count() > 2) CHECK(g.control_count() == n - 1);
      CHECK(g.negative().empty());
    }
  }
  // V-chain size with enough spare lines: 4(m-2) Toffolis for m controls
  const Circuit one(8, {Gate(LineSet{1, 2, 3, 4}, {}, 5)});
  CHECK(decompose_to_nct(one).size() == 8);
}

TEST_CASE("random permutations verify") {
  std::mt19937 rng(35);
  for (int n = 2; n <= 6; ++n)
    for (int trial = 0; trial < 8; ++trial) {
      const Permutation p = testing::random_even_permutation(rng, n);
      CHECK(realized(synthesize(p)) == p);
      SynthParams plain;
      plain.hypercube = false;
      plain.lr_search = false;
      CHECK(realized(synthesize(p, plain)) == p);
      SynthParams k1;
      k1.k = 1;
      CHECK(realized(synthesize(p, k1)) == p);
      SynthParams nct;
      nct.decompose_wide = true;
      const Circuit d = synthesize(p, nct);
      CHECK(realized(d) == p);
    }
}

TEST_CASE("odd permutations and the ancilla policy") {
  const Permutation odd = Permutation::from_transpositions(3, std::vector<Transposition>{{1, 6}});
  CHECK_THROWS_AS((void)synthesize(odd), Error);
  try {
    (void)synthesize(odd);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::odd_permutation_rejected);
  }
  SynthParams add;
  add.ancilla = AncillaPolicy::add_line;
  const Circuit c = synthesize(odd, add);
  CHECK(c.lines() == 4);
  CHECK(realized(c) == add_identity_line(odd));

  SynthParams allow;
  allow.ancilla = AncillaPolicy::allow_odd;
  const Circuit d = synthesize(odd, allow);
  CHECK(d.lines() == 3);
  CHECK(realized(d) == odd);
}

TEST_CASE("lr exploration keeps the product intact") {
  std::mt19937 rng(36);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 3;
    const Permutation p = testing::random_even_permutation(rng, n);
    SynthState s(p);
    const auto choice = lr_explore(s, {});
    if (!choice) continue;
    apply_factor(s, choice->side, choice->first);
    // left ∘ rest ∘ right must still be p
    CHECK(compose(compose(realized(s.left), s.rest), realized(s.right)) == p);
    CHECK(choice->reduction > 0);
  }
}

TEST_CASE("default group size") {
  CHECK(default_group_size(2) == 1);
  CHECK(default_group_size(3) == 1);
  CHECK(default_group_size(4) == 2);
  CHECK(default_group_size(8) == 3);
}

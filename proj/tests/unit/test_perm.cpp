#include <doctest.h>

#include <algorithm>

#include "../support/random.hpp"
#include "revsyn/cycles.hpp"
#include "revsyn/synth.hpp"

using namespace revsyn;

namespace {

Permutation product(int n, const std::vector<Cycle>& cs) { return Permutation::from_cycles(n, cs); }

Permutation product(int n, const std::vector<Transposition>& ts) { return Permutation::from_transpositions(n, ts); }

Permutation product(int n, const std::vector<TranspositionGroup>& gs, const Permutation& tail) {
  Permutation p = Permutation::identity(n);
  for (const auto& g : gs) p = compose(p, product(n, g.members));
  return compose(p, tail);
}

}  // namespace

TEST_CASE("from_table rejects non-bijections") {
  CHECK_THROWS_AS((void)Permutation::from_table({0, 0, 1, 2}), Error);
  CHECK_THROWS_AS((void)Permutation::from_table({0, 1, 2}), Error);
  CHECK(Permutation::from_table({1, 0}).cycles() == std::vector<Cycle>{{0, 1}});
}

TEST_CASE("parity") {
  CHECK(parity(Permutation::identity(3)) == Parity::even);
  CHECK(parity(Permutation::from_transpositions(3, std::vector<Transposition>{{1, 2}})) == Parity::odd);
  CHECK(parity(Permutation::from_cycles(3, std::vector<Cycle>{{1, 2, 3}})) == Parity::even);

  std::mt19937 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 5;
    const Permutation p = testing::random_permutation(rng, n);
    const Permutation q = testing::random_permutation(rng, n);
    CHECK(parity(compose(p, q)) == (parity(p) ^ parity(q)));
  }
}

TEST_CASE("an extra identity line makes every permutation even") {
  for (int n = 2; n <= 3; ++n) {
    std::vector<std::uint32_t> t(std::size_t{1} << n);
    std::iota(t.begin(), t.end(), 0u);
    do {
      const Permutation p = Permutation::from_table(t);
      const Permutation lifted = add_identity_line(p);
      CHECK(parity(lifted) == Parity::even);
      CHECK(lifted.cycles().size() == 2 * p.cycles().size());
    } while (std::next_permutation(t.begin(), t.end()));
  }
}

TEST_CASE("conjugation relabels points") {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 4;
    const Permutation p = testing::random_permutation(rng, n);
    const Circuit e = testing::random_circuit(rng, n, 3);
    const Permutation h = Permutation::of(e);
    const Permutation q = conjugate(p, e);
    for (std::uint32_t x = 0; x < p.size(); ++x) CHECK(q(h(x)) == h(p(x)));
  }
}

TEST_CASE("effective disjoint on the worked example") {
  // a..g chosen so that the only pairs at distance 1 are (a,e), (b,g), (c,f)
  const std::uint32_t a = 0, b = 3, c = 5, e = 8, f = 13, g = 19;
  const Cycle cyc{a, b, c, e, f, g};
  DisjointTrace trace;
  const DisjointResult r = effective_disjoint(cyc, 1, &trace);
  REQUIRE(r.found);
  const std::vector<Cycle> expected{{b, g}, {c, f}, {a, b}, {c, g}, {e, f}};
  CHECK(r.cycles == expected);
  CHECK(r.chosen == 2);
  CHECK(product(5, r.cycles) == product(5, std::vector<Cycle>{cyc}));

  // one pass each per split
  CHECK(trace.initial_pair_scans == 1);
  for (const auto& s : trace.splits) {
    CHECK(s.pair_scans <= 1);
    CHECK(s.break_counts == 1);
    CHECK(s.selections == 1);
  }

  const DisjointResult rotated = effective_disjoint(Cycle{c, e, f, g, a, b}, 1);
  CHECK(rotated.cycles == r.cycles);
}

TEST_CASE("effective disjoint trivial cases") {
  const DisjointResult two = effective_disjoint(Cycle{1, 3}, 1);
  CHECK(two.cycles == std::vector<Cycle>{{1, 3}});
  const DisjointResult none = effective_disjoint(Cycle{0, 7, 1}, 3);
  CHECK(product(3, none.cycles) == product(3, std::vector<Cycle>{{0, 7, 1}}));
}

TEST_CASE("effective disjoint multiplies back, exhaustive small cycles") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + trial % 4;
    std::vector<std::uint32_t> pts(std::size_t{1} << n);
    std::iota(pts.begin(), pts.end(), 0u);
    std::shuffle(pts.begin(), pts.end(), rng);
    const std::size_t len = 2 + trial % std::min<std::size_t>(pts.size() - 1, 12);
    const Cycle cyc(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(len));
    for (int delta = 1; delta <= n; ++delta) {
      const DisjointResult r = effective_disjoint(cyc, delta);
      CHECK(product(n, r.cycles) == product(n, std::vector<Cycle>{cyc}));
      for (std::size_t i = 0; i < r.chosen; ++i) {
        REQUIRE(r.cycles[i].size() == 2);
        CHECK(std::popcount(r.cycles[i][0] ^ r.cycles[i][1]) == delta);
      }
    }
  }
}

TEST_CASE("split left and right") {
  const Cycle c{1, 4, 6, 2};
  for (auto [x, y] : {std::pair{1u, 6u}, std::pair{4u, 2u}, std::pair{1u, 4u}}) {
    const Transposition t(x, y);
    const SplitResult l = split_left(c, t);
    const SplitResult r = split_right(c, t);
    const Permutation want = product(3, std::vector<Cycle>{c});
    CHECK(product(3, l.factors()) == want);
    CHECK(product(3, r.factors()) == want);
    CHECK(l.side == Side::left);
    CHECK(r.side == Side::right);
  }
  CHECK_THROWS_AS((void)split_left(c, Transposition(1, 3)), Error);
}

TEST_CASE("distance histogram and delta") {
  const Permutation p = Permutation::from_cycles(3, std::vector<Cycle>{{0, 1, 3}});
  const auto h = distance_histogram(p);
  CHECK(h.at(1) == 2);
  CHECK(h.at(2) == 1);
  CHECK(select_delta(p) == 1);
  CHECK_FALSE(select_delta(Permutation::identity(3)).has_value());
}

TEST_CASE("decompose is minimal and exact") {
  std::mt19937 rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 7;
    const Permutation p = testing::random_permutation(rng, n);
    const auto ts = decompose(p, select_delta(p));
    CHECK(ts.size() == p.distance());
    CHECK(product(n, ts) == p);
  }
}

TEST_CASE("grouping examples") {
  {
    const Permutation p = Permutation::from_transpositions(3, std::vector<Transposition>{{0, 1}, {2, 3}});
    const Grouping g = group_transpositions(p, 2);
    CHECK(g.groups.size() == 1);
    CHECK(g.residual.is_identity());
  }
  {
    const Permutation p = Permutation::from_cycles(3, std::vector<Cycle>{{0, 1, 3}});
    const Grouping g = group_transpositions(p, 2);
    CHECK(g.groups.empty());
    CHECK(g.residual == p);
  }
  {
    // TOF(1;2;3) * TOF(1;2;5) on five lines: four disjoint transpositions
    const std::vector<Transposition> h{{16, 21}, {17, 20}, {18, 23}, {19, 22}};
    const Permutation p = Permutation::from_transpositions(5, h);
    const Grouping g = group_transpositions(p, 2);
    CHECK(g.groups.size() == 2);
    CHECK(g.residual.is_identity());
    CHECK(product(5, g.groups, g.residual) == p);
  }
}

TEST_CASE("grouping multiplies back") {
  std::mt19937 rng(25);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 6;
    const Permutation p = testing::random_permutation(rng, n);
    const std::size_t k = 1 + static_cast<std::size_t>(trial % 4);
    const Grouping g = group_transpositions(p, k);
    CHECK(product(n, g.groups, g.residual) == p);
    for (const auto& grp : g.groups) {
      CHECK(grp.members.size() == k);
      for (std::size_t i = 0; i < grp.members.size(); ++i)
        for (std::size_t j = i + 1; j < grp.members.size(); ++j) CHECK(grp.members[i].independent_of(grp.members[j]));
    }
  }
}

#include <doctest.h>

#include "../support/random.hpp"
#include "revsyn/optimize.hpp"

using namespace revsyn;

namespace {

Gate tof(LineSet pos, LineSet neg, int t) { return Gate(pos, neg, t); }

Permutation of(int n, const std::vector<Gate>& gs) { return Permutation::of(Circuit(n, gs)); }

}  // namespace

TEST_CASE("independence examples") {
  CHECK(independent(tof({2, 3}, {4}, 1), tof({1}, {2, 4}, 3)));
  CHECK(independent(tof({2}, {}, 1), tof({2}, {}, 1)));
  CHECK_FALSE(independent(tof({1}, {}, 2), tof({2}, {}, 3)));
}

TEST_CASE("independence agrees with commutation") {
  std::mt19937 rng(51);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 2 + trial % 5;
    const Gate a = testing::random_gate(rng, n);
    const Gate b = testing::random_gate(rng, n);
    CHECK(independent(a, b) == (of(n, {a, b}) == of(n, {b, a})));
  }
}

TEST_CASE("expansion of negative controls") {
  const Gate g = tof({2}, {1, 3}, 4);
  const auto nots = expand_to_nct(g, ExpandVariant::nots);
  CHECK(nots == std::vector<Gate>{Gate::not_gate(1), Gate::not_gate(3), tof({1, 2, 3}, {}, 4), Gate::not_gate(3), Gate::not_gate(1)});
  const auto subsets = expand_to_nct(g, ExpandVariant::subsets);
  CHECK(subsets == std::vector<Gate>{tof({2}, {}, 4), tof({1, 2}, {}, 4), tof({2, 3}, {}, 4), tof({1, 2, 3}, {}, 4)});
  CHECK(of(4, nots) == of(4, {g}));
  CHECK(of(4, subsets) == of(4, {g}));
  const Gate pos = tof({1, 2}, {}, 3);
  CHECK(expand_to_nct(pos, ExpandVariant::nots) == std::vector<Gate>{pos});
  CHECK(expand_to_nct(pos, ExpandVariant::subsets) == std::vector<Gate>{pos});
}

TEST_CASE("expansion sizes") {
  std::mt19937 rng(52);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 5;
    const Gate g = testing::random_gate(rng, n);
    const std::size_t j = static_cast<std::size_t>(g.negative().size());
    CHECK(expand_to_nct(g, ExpandVariant::nots).size() == (j == 0 ? 1 : 2 * j + 1));
    CHECK(expand_to_nct(g, ExpandVariant::subsets).size() == (std::size_t{1} << j));
  }
}

TEST_CASE("merge rules") {
  {
    const auto r = try_merge(tof({1, 3, 4}, {2}, 5), tof({1, 3}, {2, 4}, 5));
    REQUIRE(r.has_value());
    CHECK(r->gates == std::vector<Gate>{tof({1, 3}, {2}, 5)});
    CHECK(r->rule == RuleId::merge_drop);
  }
  {
    const auto r = try_merge(tof({1, 3, 4}, {2}, 5), tof({1, 3}, {2}, 5));
    REQUIRE(r.has_value());
    CHECK(r->gates == std::vector<Gate>{tof({1, 3}, {2, 4}, 5)});
    CHECK(r->rule == RuleId::merge_to_negative);
  }
  {
    const auto r = try_merge(tof({1, 3}, {2, 4}, 5), tof({1, 3}, {2}, 5));
    REQUIRE(r.has_value());
    CHECK(r->gates == std::vector<Gate>{tof({1, 3, 4}, {2}, 5)});
    CHECK(r->rule == RuleId::merge_to_positive);
  }
  {
    const Gate g = tof({1}, {2}, 3);
    const auto r = try_merge(g, g);
    REQUIRE(r.has_value());
    CHECK(r->gates.empty());
    CHECK(r->rule == RuleId::cancel_identical);
  }
  CHECK_FALSE(try_merge(tof({1}, {}, 3), tof({2}, {}, 3)).has_value());
}

TEST_CASE("negative-control reduction") {
  {
    const auto r = reduce_negative(tof({2, 4}, {1, 3}, 5), tof({2, 3}, {1, 4}, 5));
    REQUIRE(r.has_value());
    CHECK(r->gates == std::vector<Gate>{tof({2, 4}, {1}, 5), tof({2, 3}, {1}, 5)});
  }
  {
    const auto r = reduce_negative(tof({2}, {1, 3}, 5), tof({2}, {1, 4}, 5));
    REQUIRE(r.has_value());
    CHECK(r->gates == std::vector<Gate>{tof({2, 3}, {1}, 5), tof({2, 4}, {1}, 5)});
  }
  CHECK_FALSE(reduce_negative(tof({1}, {}, 5), tof({2}, {}, 5)).has_value());
}

TEST_CASE("interchange rules") {
  {
    const Gate g1 = tof({4}, {3}, 2), g2 = tof({1, 4}, {2}, 5);
    const auto r = interchange(g1, g2);
    REQUIRE(r.has_value());
    CHECK(r->rule == RuleId::interchange_three_gate);
    REQUIRE(r->gates.size() == 3);
    CHECK(r->gates[0].target() == 5);
    CHECK(r->gates[1] == g2);
    CHECK(r->gates[2] == g1);
    CHECK(of(5, r->gates) == of(5, {g1, g2}));
  }
  {
    const Gate g1 = tof({5}, {1}, 3), g2 = tof({2, 5}, {1, 3, 4}, 6);
    const auto r = interchange(g1, g2);
    REQUIRE(r.has_value());
    CHECK(r->rule == RuleId::interchange_polarity_flip);
    CHECK(r->gates == std::vector<Gate>{tof({2, 3, 5}, {1, 4}, 6), g1});
  }
  CHECK_FALSE(interchange(tof({1}, {}, 2), tof({3}, {}, 4)).has_value());
}

TEST_CASE("rewrite respects mobility") {
  const Gate a = tof({1, 3, 4}, {2}, 5), b = tof({1, 3}, {2, 4}, 5);
  const Circuit c(7, {a, tof({6}, {}, 7), b});
  const auto r = find_rewrite(c, all_rules);
  REQUIRE(r.has_value());
  CHECK(r->i == 0);
  CHECK(r->j == 2);
  const Circuit out = apply_rewrite(c, *r);
  CHECK(Permutation::of(out) == Permutation::of(c));
  CHECK(out.size() == 2);

  // a blocking gate in between stops the pair from meeting
  const Circuit blocked(5, {tof({1}, {}, 2), tof({2}, {}, 1), tof({1}, {}, 2)});
  if (auto br = find_rewrite(blocked, std::array{RuleId::cancel_identical})) CHECK(Permutation::of(apply_rewrite(blocked, *br)) == Permutation::of(blocked));
}

TEST_CASE("move and replace examples") {
  const Gate a = tof({1, 3, 4}, {2}, 5), b = tof({1, 3}, {2, 4}, 5);
  CHECK(move_and_replace(Circuit(5, {a, b})).circuit == Circuit(5, {tof({1, 3}, {2}, 5)}));

  const Gate sep = tof({6}, {}, 7);
  const Circuit spread(7, {a, sep, b});
  const Circuit out = move_and_replace(spread).circuit;
  CHECK(out.size() == 2);
  CHECK(std::find(out.gates().begin(), out.gates().end(), sep) != out.gates().end());
  CHECK(Permutation::of(out) == Permutation::of(spread));

  const Circuit minimal(3, {Gate::toffoli(1, 2, 3)});
  CHECK(move_and_replace(minimal).circuit == minimal);
}

TEST_CASE("move and replace is safe") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 4;
    const Circuit c = testing::random_circuit(rng, n, 5 + static_cast<std::size_t>(trial % 30), 3);
    OptimizeParams p;
    p.budget = 2000;
    const OptimizeResult r = move_and_replace(c, p);
    CHECK(Permutation::of(r.circuit) == Permutation::of(c));
    CHECK(r.circuit.size() <= c.size());
    CHECK(r.rewrites <= p.budget);
    // replaying the recorded path reproduces the result
    Circuit replay = c;
    for (const auto& rw : r.applied) replay = apply_rewrite(replay, rw);
    CHECK(replay == r.circuit);
  }
}

TEST_CASE("rule names") {
  for (RuleId r : all_rules) CHECK_FALSE(to_string(r).empty());
}

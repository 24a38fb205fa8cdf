#include <doctest.h>

#include "../support/random.hpp"
#include "revsyn/cost.hpp"
#include "revsyn/io.hpp"

using namespace revsyn;

TEST_CASE("gate validation") {
  CHECK_FALSE(validate_gate(LineSet{1}, LineSet{2}, 3, 3).has_value());
  CHECK(validate_gate(LineSet{1}, LineSet{1}, 2, 3) == ErrorCode::overlapping_controls);
  CHECK(validate_gate(LineSet{1}, {}, 1, 3) == ErrorCode::target_is_control);
  CHECK(validate_gate(LineSet{4}, {}, 1, 3) == ErrorCode::line_out_of_range);
  CHECK_THROWS_AS(Gate(LineSet{1}, LineSet{1}, 2), Error);
}

TEST_CASE("gate action with a negative control") {
  const Gate g(LineSet{1}, LineSet{2}, 3);
  CHECK(g.apply(BitVector(3, 0b100)) == BitVector(3, 0b101));
  CHECK(g.apply(BitVector(3, 0b110)) == BitVector(3, 0b110));

  Circuit c(5, {Gate(LineSet{1}, LineSet{2}, 3), Gate(LineSet{1}, LineSet{2}, 5)});
  CHECK(evaluate(c, BitVector(5, 0b10000)) == BitVector(5, 0b10101));
}

TEST_CASE("gates are involutions") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 7;
    const Gate g = testing::random_gate(rng, n);
    for (std::uint32_t v = 0; v < (1u << n); ++v) CHECK(g.apply(g.apply(v, n), n) == v);
  }
}

TEST_CASE("simulation") {
  CHECK(simulate(Circuit(2)) == std::vector<std::uint32_t>{0, 1, 2, 3});
  CHECK(simulate(Circuit(1, {Gate::not_gate(1)})) == std::vector<std::uint32_t>{1, 0});

  std::mt19937 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 6;
    const Circuit a = testing::random_circuit(rng, n, 1 + trial % 9);
    const Circuit b = testing::random_circuit(rng, n, 1 + trial % 5);
    // bijection
    auto t = simulate(a);
    std::vector<bool> hit(t.size(), false);
    for (auto y : t) hit[y] = true;
    CHECK(std::all_of(hit.begin(), hit.end(), [](bool h) { return h; }));
    // concatenation is composition, a first
    Circuit ab = a;
    ab.append(b);
    CHECK(Permutation::of(ab) == compose(Permutation::of(a), Permutation::of(b)));
    CHECK(gate_complexity(ab) == gate_complexity(a) + gate_complexity(b));
  }
}

TEST_CASE("simulation cap") {
  Circuit big(21);
  CHECK_THROWS_AS((void)simulate(big), Error);
  CHECK(simulate(Circuit(4), 4).size() == 16);
}

TEST_CASE("default cost model") {
  const CostModel m = CostModel::defaults();
  Circuit nots(3, {Gate::not_gate(1), Gate::not_gate(2), Gate::not_gate(3)});
  CHECK(quantum_cost(nots, m) == 3);
  CHECK(quantum_cost(Circuit(3, {Gate::toffoli(1, 2, 3)}), m) == 5);
  CHECK(quantum_cost(Circuit(3, {Gate(LineSet{1}, LineSet{2}, 3)}), m) ==
        quantum_cost(Circuit(3, {Gate(LineSet{1, 2}, {}, 3)}), m));
  CHECK(m.quantum_cost(3) == 13);
  CHECK(m.t_count(0) == 0);
  CHECK(m.t_count(2) == 7);
  CHECK(m.t_count(4) == 15);
}

TEST_CASE("costs add up over gates") {
  const CostModel m = CostModel::defaults();
  std::mt19937 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const Circuit a = testing::random_circuit(rng, 6, 10);
    const Circuit b = testing::random_circuit(rng, 6, 7);
    Circuit ab = a;
    ab.append(b);
    CHECK(quantum_cost(ab, m) == quantum_cost(a, m) + quantum_cost(b, m));
    CHECK(t_count(ab, m).count == t_count(a, m).count + t_count(b, m).count);
  }
}

TEST_CASE("negative controls cost a NOT pair when costed") {
  CostModel m = CostModel::parse("negative_controls costed\n");
  CHECK_FALSE(m.negative_controls_free());
  const Circuit pos(3, {Gate(LineSet{1, 2}, {}, 3)});
  const Circuit neg(3, {Gate(LineSet{1}, LineSet{2}, 3)});
  CHECK(quantum_cost(neg, m) == quantum_cost(pos, m) + 2 * m.quantum_cost(0));
  // T-count is polarity blind
  CHECK(t_count(neg, m).count == t_count(pos, m).count);
}

TEST_CASE("ancilla flag") {
  const CostModel m = CostModel::defaults();
  CHECK(t_count(Circuit(4, {Gate(LineSet{1, 2, 3}, {}, 4)}), m).ancilla_required);
  CHECK_FALSE(t_count(Circuit(5, {Gate(LineSet{1, 2, 3}, {}, 4)}), m).ancilla_required);
  CHECK_FALSE(t_count(Circuit(3, {Gate(LineSet{1, 2}, {}, 3)}), m).ancilla_required);
}

TEST_CASE("cost model files") {
  CostModel m = CostModel::parse("# custom\nqc 2 6\nt 3 14\n");
  CHECK(m.quantum_cost(2) == 6);
  CHECK(m.t_count(3) == 14);
  CHECK(m.quantum_cost(3) == 13);  // formula fallback
  CostModel strict = CostModel::explicit_tables({{0, 1}, {1, 1}}, {{0, 0}, {1, 0}});
  CHECK(strict.quantum_cost(1) == 1);
  CHECK_THROWS_AS((void)strict.quantum_cost(2), Error);
  CHECK_THROWS_AS((void)CostModel::parse("qc two 5\n"), Error);
}

TEST_CASE("rd53 fixture") {
  const Circuit c = read_circuit(REVSYN_DATA_DIR "/fixtures/rd53_11.tfc");
  CHECK(c.lines() == 7);
  CHECK(c.size() == 11);
  const TruthTable rd53 = read_spec(REVSYN_DATA_DIR "/suite/rd53.tt");
  CHECK(rd53.realized_by(c));
  // the constant lines start at 0 and the outputs carry the weight, MSB first
  for (std::uint32_t x = 0; x < 32; ++x) {
    const std::uint32_t y = evaluate(c, x << 2);
    std::uint32_t w = 0;
    for (int line : c.layout().outputs) w = (w << 1) | ((y >> (7 - line)) & 1u);
    CHECK(w == static_cast<std::uint32_t>(std::popcount(x)));
  }
}

#include <benchmark/benchmark.h>

#include "support/random.hpp"
#include "revsyn/flow.hpp"
#include "revsyn/io.hpp"
#include "revsyn/optimize.hpp"
#include "revsyn/rmsynth.hpp"
#include "revsyn/synth.hpp"

using namespace revsyn;

namespace {

// A fixed batch of even permutations so every iteration does the same work.
std::vector<Permutation> batch(int n, std::size_t count) {
  std::mt19937 rng(static_cast<unsigned>(n));
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(testing::random_even_permutation(rng, n));
  return out;
}

void BM_cycle(benchmark::State& state) {
  const auto perms = batch(static_cast<int>(state.range(0)), 8);
  std::size_t i = 0, gates = 0;
  for (auto _ : state) {
    const Circuit c = synthesize(perms[i++ % perms.size()]);
    gates += c.size();
    benchmark::DoNotOptimize(c);
  }
  state.counters["gates"] = benchmark::Counter(static_cast<double>(gates), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_cycle)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

void BM_rm(benchmark::State& state) {
  const auto perms = batch(static_cast<int>(state.range(0)), 8);
  std::size_t i = 0, gates = 0;
  for (auto _ : state) {
    const Circuit c = rm_synthesize(perms[i++ % perms.size()]);
    gates += c.size();
    benchmark::DoNotOptimize(c);
  }
  state.counters["gates"] = benchmark::Counter(static_cast<double>(gates), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_rm)->DenseRange(3, 10)->Unit(benchmark::kMillisecond);

void BM_hybrid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto perms = batch(n, 8);
  CombineParams cp;
  cp.weight_threshold = static_cast<int>(state.range(1));
  std::size_t i = 0, gates = 0;
  for (auto _ : state) {
    const Circuit c = combined_synthesize(perms[i++ % perms.size()], cp);
    gates += c.size();
    benchmark::DoNotOptimize(c);
  }
  state.counters["gates"] = benchmark::Counter(static_cast<double>(gates), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_hybrid)->ArgsProduct({{5, 6, 7}, {1, 2, 3}})->Unit(benchmark::kMillisecond);

void BM_optimize(benchmark::State& state) {
  std::mt19937 rng(5);
  const Circuit c = testing::random_circuit(rng, static_cast<int>(state.range(0)), static_cast<std::size_t>(state.range(1)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(move_and_replace(c));
}
BENCHMARK(BM_optimize)->ArgsProduct({{4, 8}, {50, 200}})->Unit(benchmark::kMillisecond);

void BM_rd53(benchmark::State& state) {
  const TruthTable t = read_spec(REVSYN_DATA_DIR "/suite/rd53.tt");
  FlowOptions o;
  o.lines = 7;
  o.combine.weight_threshold = 1;
  o.optimize = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_flow(t, o));
}
BENCHMARK(BM_rd53)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_simulate(benchmark::State& state) {
  std::mt19937 rng(6);
  const Circuit c = testing::random_circuit(rng, static_cast<int>(state.range(0)), 100);
  for (auto _ : state) benchmark::DoNotOptimize(simulate(c));
}
BENCHMARK(BM_simulate)->Arg(8)->Arg(12)->Arg(16);

}  // namespace

// benchmark_main ships as LTO bytecode on some distributions; define main here.
BENCHMARK_MAIN();

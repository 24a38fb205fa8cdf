#pragma once

#include <optional>

#include "revsyn/cycles.hpp"
#include "revsyn/hypercube.hpp"

namespace revsyn {

enum class AncillaPolicy {
  reject_odd,  ///< odd permutations raise odd_permutation_rejected
  add_line,    ///< odd permutations get an extra identity line (new last line)
  allow_odd,   ///< odd permutations are realized directly with wide gates
};

struct SynthParams {
  int k = 0;  ///< transpositions per group; 0 means floor(log2 n)
  bool hypercube = true;
  bool lr_search = true;
  AncillaPolicy ancilla = AncillaPolicy::reject_odd;
  /// Rewrite gates with more than two controls into Toffoli gates.
  bool decompose_wide = false;
  HypercubeLimits cube_limits;
  /// Cube search draws on all within-cycle pairs while this many points or
  /// fewer are moved; above it only the factorisation pairs are offered.
  std::size_t full_pool_limit = 256;
};

[[nodiscard]] int default_group_size(int n) noexcept;

/// p = left ∘ rest ∘ right, with left and right already realized.
struct SynthState {
  Circuit left;
  Permutation rest;
  Circuit right;

  explicit SynthState(const Permutation& p) : left(p.width()), rest(p), right(p.width()) {}
};

/// One factor peeled off a side: an involution given by its transpositions.
struct Factor {
  std::vector<Transposition> transpositions;
  Circuit gates;
  bool from_cube = false;
};

/// Next factor to peel off q from the left, or none when grouping is stuck.
[[nodiscard]] std::optional<Factor> next_factor(const Permutation& q, const SynthParams& params);

/// Applies a factor on one side of the state.
void apply_factor(SynthState& state, Side side, const Factor& f);

struct LrChoice {
  Side side = Side::left;
  Factor first;
  std::size_t reduction = 0;  ///< distance removed by the two-step branch
  std::size_t gates = 0;      ///< gates emitted by the two-step branch
};

/// Runs a factor plus one continuation step on each side and picks the branch
/// with the larger distance reduction, then fewer gates, then left. With a
/// pivot, the first factor on each side is that transposition alone.
/// Returns none when neither side can make progress.
[[nodiscard]] std::optional<LrChoice> lr_explore(const SynthState& state, const SynthParams& params,
                                                 std::optional<Transposition> pivot = std::nullopt);

/// Cycle-based synthesis. The result is verified by the caller's oracle;
/// its line count is n, or n + 1 when the add_line policy fired.
[[nodiscard]] Circuit synthesize(const Permutation& spec, const SynthParams& params = {});

/// p on n lines lifted to n + 1 lines: p'(x, b) = (p(x), b).
[[nodiscard]] Permutation add_identity_line(const Permutation& p);

}  // namespace revsyn

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "revsyn/permutation.hpp"

namespace revsyn {

/// Pass counters recorded by effective_disjoint, one entry per split.
struct DisjointTrace {
  struct Split {
    int pair_scans = 0;
    int break_counts = 0;
    int selections = 0;
  };
  int initial_pair_scans = 0;
  std::vector<Split> splits;
};

struct DisjointResult {
  /// Leading `chosen` entries are the extracted distance-Δ transpositions in
  /// extraction order; the rest are the leftover cycles ordered by smallest
  /// point. The left-to-right product equals the input cycle.
  std::vector<Cycle> cycles;
  std::size_t chosen = 0;
  /// False when the cycle has no pair at distance Δ (cycles holds the input).
  bool found = false;
};

/// Repeatedly splits the cycle at a Hamming-distance-Δ pair whose removal
/// breaks the fewest other Δ-pairs (ties: smallest pair by value). The result
/// does not depend on the rotation of the input.
[[nodiscard]] DisjointResult effective_disjoint(const Cycle& c, int delta, DisjointTrace* trace = nullptr);

enum class Side { left, right };

struct SplitResult {
  Transposition t;
  std::vector<Cycle> rest;
  Side side;

  /// Factors in product order (t first for a left split, last for a right split).
  [[nodiscard]] std::vector<Cycle> factors() const;
};

/// c = t ∘ rest.
[[nodiscard]] SplitResult split_left(const Cycle& c, const Transposition& t);
/// c = rest ∘ t.
[[nodiscard]] SplitResult split_right(const Cycle& c, const Transposition& t);

/// Count of unordered within-cycle point pairs per Hamming distance.
[[nodiscard]] std::map<int, std::size_t> distance_histogram(const Permutation& p);
/// Distance with the largest count, ties to the smaller distance.
[[nodiscard]] std::optional<int> select_delta(const Permutation& p);

/// Minimal transposition factorisation of p: per cycle, the effective
/// disjoint at Δ followed by consecutive-pair chains of the leftovers.
[[nodiscard]] std::vector<Transposition> decompose(const Permutation& p, std::optional<int> delta);

struct TranspositionGroup {
  std::vector<Transposition> members;
};

struct Grouping {
  std::vector<TranspositionGroup> groups;
  Permutation residual;
};

/// Greedy grouping of a factorisation into groups of k pairwise independent
/// transpositions. A transposition that touches a point of the open group
/// or of an earlier leftover becomes a leftover itself, so every group
/// commutes past the leftovers before it and
/// p = G_1 ∘ ... ∘ G_m ∘ residual holds exactly.
[[nodiscard]] Grouping group_transpositions(int width, std::span<const Transposition> factors, std::size_t k);
[[nodiscard]] Grouping group_transpositions(const Permutation& p, std::size_t k);

}  // namespace revsyn

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "revsyn/permutation.hpp"

namespace revsyn {

/// Subcube with fixed lines I (value 1) and J (value 0); toggles D are
/// flipped together, every other line is free. It describes the involution
/// v <-> v xor mask(D) on all cube points.
struct CubeDescriptor {
  LineSet fixed_positive;
  LineSet fixed_negative;
  LineSet toggles;

  [[nodiscard]] LineSet free_lines(int n) const;
};

struct HypercubeHit {
  CubeDescriptor cube;
  Circuit gates;                        ///< one TOF(I;J;d) per d in D
  std::vector<Transposition> consumed;  ///< pairs of the cube, by smaller point
};

struct HypercubeLimits {
  std::size_t max_seeds = 256;  ///< seed pairs tried per difference mask
  /// Reject cubes unless |D| < ratio * consumed.
  std::size_t acceptance_ratio = 3;
};

/// Largest full subcube (by consumed transpositions, then fewer gates) all of
/// whose pairs occur in the pool.
[[nodiscard]] std::optional<HypercubeHit> find_hypercube(int n, std::span<const Transposition> pool,
                                                         const HypercubeLimits& limits = {});

/// Every cube candidate the search would consider, best first; used when the
/// caller has an extra acceptance test.
[[nodiscard]] std::vector<HypercubeHit> hypercube_candidates(int n, std::span<const Transposition> pool,
                                                             const HypercubeLimits& limits = {});

}  // namespace revsyn

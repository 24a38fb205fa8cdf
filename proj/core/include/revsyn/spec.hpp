#pragma once

#include <cstdint>
#include <vector>

#include "revsyn/permutation.hpp"

namespace revsyn {

/// Multi-output truth table over n inputs. For row x, output column j
/// (1-based) is bit (m - j) of value[x] and is only meaningful where the
/// same bit of care[x] is set.
struct TruthTable {
  int inputs = 0;
  int outputs = 0;
  std::vector<std::uint32_t> care;
  std::vector<std::uint32_t> value;

  [[nodiscard]] static TruthTable from_permutation(const Permutation& p);
  /// Fully specified, n == m, and bijective.
  [[nodiscard]] bool is_bijection() const;
  /// True when the circuit, with inputs fed and constants set per its
  /// layout (or the identity layout), produces every cared output bit.
  [[nodiscard]] bool realized_by(const Circuit& c) const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;
};

struct Embedding {
  Permutation permutation;
  LineLayout layout;
};

/// Embeds a (partial, multi-output) table into a bijection on `lines` lines:
/// inputs on lines 1..n, constant-0 lines after them, outputs on the last m
/// lines. Garbage and don't-care bits are chosen greedily to keep every
/// image close to its input in Hamming distance; for m <= 4 the order of
/// the output lines is also chosen to minimize that distance.
[[nodiscard]] Embedding extend_to_bijection(const TruthTable& spec, int lines);

struct EmbeddingOptions {
  /// Output line per spec column; empty means choose as above.
  std::vector<int> output_lines;
  /// Swap two unconstrained images when that makes the bijection even.
  bool prefer_even = false;
};
[[nodiscard]] Embedding extend_to_bijection(const TruthTable& spec, int lines, const EmbeddingOptions& options);

/// XOR embedding (x, c) -> (x', c ^ f(x)). When there are fewer than n + m
/// lines, some outputs overwrite an input line; this needs x -> x' to stay
/// injective, so only outputs that are linear in that input qualify
/// (parity, for instance). `overwrite` lists (column, line) pairs to use;
/// empty means pick greedily. Don't-care output bits are taken as 0.
/// Throws infeasible_spec when no such embedding exists.
[[nodiscard]] Embedding xor_embedding(const TruthTable& spec, int lines,
                                      const std::vector<std::pair<int, int>>& overwrite = {});

}  // namespace revsyn

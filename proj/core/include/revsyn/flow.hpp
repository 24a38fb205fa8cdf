#pragma once

#include <string>

#include "revsyn/optimize.hpp"
#include "revsyn/rmsynth.hpp"
#include "revsyn/spec.hpp"

namespace revsyn {

enum class Method { cycle, rm, hybrid };

/// nearest: extend_to_bijection; xor: xor_embedding; both: run the flow on
/// each (when the XOR one exists) and keep the smaller circuit.
enum class EmbeddingChoice { both, nearest, xor_outputs };

/// Everything between a truth table and a finished circuit: embedding,
/// synthesis, optional clean-up.
struct FlowOptions {
  int lines = 0;  ///< 0 picks the fewest lines that admit an embedding
  EmbeddingChoice embedding = EmbeddingChoice::both;
  Method method = Method::hybrid;
  CombineParams combine;  ///< combine.synth also drives the cycle method
  bool optimize = false;
  OptimizeParams opt;
  /// Try every method, threshold and push policy; keep the smallest result.
  bool portfolio = false;
  /// Decompose gates with three or more controls at the end.
  bool nct = false;
};

struct FlowResult {
  Circuit circuit;
  Embedding embedding;
  std::string recipe;  ///< short description of the winning configuration
};

/// Fewest lines on which the table can be embedded (at least max(n, m)).
[[nodiscard]] int minimal_lines(const TruthTable& spec);

/// Runs the flow. The circuit carries the embedding's line layout; callers
/// are expected to check it with TruthTable::realized_by before use.
[[nodiscard]] FlowResult run_flow(const TruthTable& spec, const FlowOptions& options = {});

}  // namespace revsyn

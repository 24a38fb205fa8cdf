#include "revsyn/flow.hpp"

#include <optional>

#include "revsyn/group.hpp"

namespace revsyn {

int minimal_lines(const TruthTable& spec) {
  const int low = std::max(spec.inputs, spec.outputs);
  if (spec.inputs == spec.outputs && spec.is_bijection()) return low;
  for (int l = low; l <= hard_simulation_cap; ++l) {
    try {
      (void)extend_to_bijection(spec, l);
      return l;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::infeasible_spec) throw;
    }
  }
  throw Error(ErrorCode::infeasible_spec, "no embedding within " + std::to_string(hard_simulation_cap) + " lines");
}

namespace {

const char* name_of(PushPolicy p) {
  switch (p) {
    case PushPolicy::right_only: return "right";
    case PushPolicy::left_only: return "left";
    case PushPolicy::alternate: return "alternate";
  }
  return "?";
}

// The add-line policy hands back one line more than the embedding asked for;
// the extra line starts at 0 and is not an output.
void attach_layout(Circuit& c, const Embedding& e, int spec_inputs) {
  LineLayout layout = e.layout;
  const int base = e.permutation.width();
  if (c.lines() > base) {
    if (layout.inputs.empty()) {
      for (int l = 1; l <= spec_inputs; ++l) layout.inputs.push_back(l);
      layout.outputs = layout.inputs;
    }
    for (int l = base; l < c.lines(); ++l) layout.constants.push_back(false);
  }
  if (layout.declared()) c.set_layout(std::move(layout));
}

struct Candidate {
  Circuit circuit;
  std::string recipe;
};

Candidate finish(Circuit c, std::string recipe, const FlowOptions& options) {
  if (options.nct) c = decompose_to_nct(c);
  if (options.optimize) {
    c = move_and_replace(c, options.opt).circuit;
    recipe += " +opt";
  }
  return {std::move(c), std::move(recipe)};
}

Candidate one(const Permutation& p, Method method, const CombineParams& cp, const FlowOptions& options) {
  switch (method) {
    case Method::rm: return finish(rm_synthesize(p), "rm", options);
    case Method::cycle: {
      SynthParams sp = cp.synth;
      sp.decompose_wide = false;
      return finish(synthesize(p, sp), "cycle", options);
    }
    case Method::hybrid:
      return finish(combined_synthesize(p, cp),
                    "hybrid w=" + std::to_string(cp.weight_threshold) + " " + name_of(cp.policy), options);
  }
  throw Error(ErrorCode::precondition_violated, "unknown method");
}

}  // namespace

FlowResult run_flow(const TruthTable& spec, const FlowOptions& options) {
  const int lines = options.lines > 0 ? options.lines : minimal_lines(spec);
  std::vector<std::pair<Embedding, std::string>> embeddings;
  if (lines == spec.inputs && spec.is_bijection()) {
    embeddings.emplace_back(extend_to_bijection(spec, lines), "");
  } else {
    if (options.embedding != EmbeddingChoice::xor_outputs) {
      EmbeddingOptions eo;
      // The cycle engine wants even permutations; free rows make that cheap.
      eo.prefer_even = options.method == Method::cycle && !options.portfolio &&
                       options.combine.synth.ancilla != AncillaPolicy::allow_odd;
      embeddings.emplace_back(extend_to_bijection(spec, lines, eo), "nearest");
    }
    if (options.embedding != EmbeddingChoice::nearest) {
      try {
        embeddings.emplace_back(xor_embedding(spec, lines), "xor");
      } catch (const Error& e) {
        if (e.code() != ErrorCode::infeasible_spec || options.embedding == EmbeddingChoice::xor_outputs) throw;
      }
    }
  }

  std::optional<FlowResult> best;
  for (auto& [e, label] : embeddings) {
    std::optional<Candidate> pick;
    auto consider = [&](Candidate c) {
      attach_layout(c.circuit, e, spec.inputs);
      if (!spec.realized_by(c.circuit)) return;
      if (!pick || c.circuit.size() < pick->circuit.size() ||
          (c.circuit.size() == pick->circuit.size() && c.circuit.lines() < pick->circuit.lines()))
        pick = std::move(c);
    };
    // An odd permutation under reject_odd only rules out this embedding
    // when another one is on the table.
    try {
      if (!options.portfolio) {
        consider(one(e.permutation, options.method, options.combine, options));
      } else {
        consider(one(e.permutation, Method::rm, options.combine, options));
        CombineParams cyc = options.combine;
        cyc.synth.ancilla = AncillaPolicy::allow_odd;
        consider(one(e.permutation, Method::cycle, cyc, options));
        for (int w = 0; w <= lines; ++w)
          for (PushPolicy pol : {PushPolicy::right_only, PushPolicy::left_only, PushPolicy::alternate}) {
            CombineParams cp = options.combine;
            cp.weight_threshold = w;
            cp.policy = pol;
            consider(one(e.permutation, Method::hybrid, cp, options));
          }
      }
    } catch (const Error& err) {
      if (err.code() != ErrorCode::odd_permutation_rejected || embeddings.size() == 1) throw;
    }
    if (!pick) continue;
    if (!label.empty()) pick->recipe = label + " " + pick->recipe;
    if (!best || pick->circuit.size() < best->circuit.size())
      best = FlowResult{std::move(pick->circuit), std::move(e), std::move(pick->recipe)};
  }
  if (!best) throw Error(ErrorCode::precondition_violated, "no configuration produced a verified circuit");
  return std::move(*best);
}

}  // namespace revsyn

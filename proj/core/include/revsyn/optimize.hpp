#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "revsyn/circuit.hpp"

namespace revsyn {

enum class RuleId {
  expand_nots,
  expand_subsets,
  merge_drop,
  merge_to_negative,
  merge_to_positive,
  reduce_swap_pair,
  reduce_flip_pair,
  interchange_three_gate,
  interchange_polarity_flip,
  cancel_identical,
};

inline constexpr RuleId all_rules[] = {
    RuleId::expand_nots,        RuleId::expand_subsets,         RuleId::merge_drop,
    RuleId::merge_to_negative,  RuleId::merge_to_positive,      RuleId::reduce_swap_pair,
    RuleId::reduce_flip_pair,   RuleId::interchange_three_gate, RuleId::interchange_polarity_flip,
    RuleId::cancel_identical,
};

std::string_view to_string(RuleId r) noexcept;

/// Two gates commute iff neither target controls the other, or their
/// controls contradict (one needs a line at 1 the other needs at 0).
[[nodiscard]] bool independent(const Gate& a, const Gate& b) noexcept;

enum class ExpandVariant { nots, subsets };

/// NCT expansion of negative controls: NOT-wrapping (2|J|+1 gates) or the
/// sum over subsets of J (2^|J| gates).
[[nodiscard]] std::vector<Gate> expand_to_nct(const Gate& g, ExpandVariant variant);

/// Replacement for a pair of gates, in application order.
struct Replacement {
  RuleId rule;
  std::vector<Gate> gates;
};

/// Same-target merges (including g * g = empty). Gates sharing a target
/// commute, so the order of the arguments does not matter.
[[nodiscard]] std::optional<Replacement> try_merge(const Gate& g1, const Gate& g2);
/// Same-target pairs rewritten with fewer negative controls in total.
[[nodiscard]] std::optional<Replacement> reduce_negative(const Gate& g1, const Gate& g2);
/// Dependent pair g1 * g2 rewritten so that g1 ends up last.
[[nodiscard]] std::optional<Replacement> interchange(const Gate& g1, const Gate& g2);

struct Rewrite {
  std::size_t i;
  std::size_t j;
  std::size_t s;  ///< replacement sits where e_i and e_j met, after e_s
  RuleId rule;
  std::vector<Gate> replacement;
};

struct OptimizeParams {
  std::size_t budget = 20000;   ///< rewrites in total
  std::size_t patience = 400;   ///< rewrites without a new best before stopping
  std::size_t slack = 2;        ///< gates above the best allowed for three-gate interchanges
};

struct OptimizeResult {
  Circuit circuit;
  std::size_t rewrites = 0;
  bool budget_exhausted = false;
  std::vector<Rewrite> applied;  ///< rewrites on the path to the returned circuit
};

/// First rewrite (pairs by increasing distance, then position) whose gates
/// can be brought together and whose rule is in `rules`.
[[nodiscard]] std::optional<Rewrite> find_rewrite(const Circuit& c, std::span<const RuleId> rules);
[[nodiscard]] Circuit apply_rewrite(const Circuit& c, const Rewrite& r);

/// Moving-and-replacing: gate-count-reducing rules first, then rules that
/// keep the count, then three-gate interchanges within the slack, skipping
/// circuits already visited. Returns the smallest circuit seen.
[[nodiscard]] OptimizeResult move_and_replace(const Circuit& c, const OptimizeParams& params = {});

}  // namespace revsyn

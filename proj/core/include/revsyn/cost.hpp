#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string_view>

#include "revsyn/circuit.hpp"

namespace revsyn {

/// Per-control-count cost tables. Entries missing from the explicit tables
/// fall back to the built-in formulas unless the model was built without
/// fallback, in which case lookups raise model_incomplete.
///
/// Built-in quantum cost: 1 for c <= 1, 5 for c = 2, 2^(c+1) - 3 beyond.
/// Built-in T-count: 0 for c <= 1, 7 for c = 2, 8(c-1) - 9 beyond.
class CostModel {
public:
  static CostModel defaults();
  /// Tables only; no formula fallback.
  static CostModel explicit_tables(std::map<int, std::uint64_t> qc, std::map<int, std::uint64_t> t);

  /// Parses `qc <c> <cost>` / `t <c> <cost>` lines on top of the defaults.
  /// Also accepts `negative_controls free|costed` and `ancilla_threshold <c>`.
  static CostModel parse(std::string_view text);
  static CostModel load(const std::filesystem::path& path);

  [[nodiscard]] std::uint64_t quantum_cost(int controls) const;
  [[nodiscard]] std::uint64_t t_count(int controls) const;

  [[nodiscard]] bool negative_controls_free() const noexcept { return negative_controls_free_; }
  void set_negative_controls_free(bool free) noexcept { negative_controls_free_ = free; }
  /// Smallest control count whose decomposition needs a spare line.
  [[nodiscard]] int ancilla_threshold() const noexcept { return ancilla_threshold_; }

  void set_quantum_cost(int controls, std::uint64_t cost);
  void set_t_count(int controls, std::uint64_t cost);

private:
  CostModel() = default;
  void check_monotone() const;

  std::map<int, std::uint64_t> qc_;
  std::map<int, std::uint64_t> t_;
  bool fallback_ = true;
  bool negative_controls_free_ = true;
  int ancilla_threshold_ = 3;
};

/// Sum of per-gate quantum costs. With negative controls not free, every
/// negative control is charged as the NOT pair that would realize it.
[[nodiscard]] std::uint64_t quantum_cost(const Circuit& c, const CostModel& m);

struct TCount {
  std::uint64_t count = 0;
  /// Some gate reached the ancilla threshold on a circuit with no spare line.
  bool ancilla_required = false;
};
[[nodiscard]] TCount t_count(const Circuit& c, const CostModel& m);

}  // namespace revsyn

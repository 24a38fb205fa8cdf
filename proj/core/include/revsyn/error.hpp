#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace revsyn {

enum class ErrorCode {
  overlapping_controls,
  target_is_control,
  line_out_of_range,
  too_many_lines,
  model_incomplete,
  invalid_cost_model,
  not_bijective,
  width_mismatch,
  elements_not_in_cycle,
  odd_permutation_rejected,
  canonicalization_failed,
  insufficient_lines,
  infeasible_spec,
  precondition_violated,
  unknown_variable,
  malformed_gate,
  unsupported_gate_kind,
  malformed_header,
  row_count_mismatch,
  bad_symbol,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace revsyn

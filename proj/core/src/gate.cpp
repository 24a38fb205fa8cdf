#include "revsyn/gate.hpp"

#include <sstream>

namespace revsyn {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::overlapping_controls: return "OverlappingControls";
    case ErrorCode::target_is_control: return "TargetIsControl";
    case ErrorCode::line_out_of_range: return "LineOutOfRange";
    case ErrorCode::too_many_lines: return "TooManyLines";
    case ErrorCode::model_incomplete: return "ModelIncomplete";
    case ErrorCode::invalid_cost_model: return "InvalidCostModel";
    case ErrorCode::not_bijective: return "NotBijective";
    case ErrorCode::width_mismatch: return "WidthMismatch";
    case ErrorCode::elements_not_in_cycle: return "ElementsNotInCycle";
    case ErrorCode::odd_permutation_rejected: return "OddPermutationRejected";
    case ErrorCode::canonicalization_failed: return "CanonicalizationFailed";
    case ErrorCode::insufficient_lines: return "InsufficientLines";
    case ErrorCode::infeasible_spec: return "InfeasibleSpec";
    case ErrorCode::precondition_violated: return "PreconditionViolated";
    case ErrorCode::unknown_variable: return "UnknownVariable";
    case ErrorCode::malformed_gate: return "MalformedGate";
    case ErrorCode::unsupported_gate_kind: return "UnsupportedGateKind";
    case ErrorCode::malformed_header: return "MalformedHeader";
    case ErrorCode::row_count_mismatch: return "RowCountMismatch";
    case ErrorCode::bad_symbol: return "BadSymbol";
  }
  return "Unknown";
}

std::vector<int> LineSet::lines() const {
  std::vector<int> out;
  std::uint32_t m = mask_;
  while (m != 0) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

BitVector::BitVector(int width, std::uint32_t value) : width_(width), value_(value) {
  if (width < 1 || width > max_lines) throw Error(ErrorCode::line_out_of_range, "bit vector width " + std::to_string(width));
  if (width < 32 && (value >> width) != 0) throw Error(ErrorCode::line_out_of_range, "value wider than bit vector");
}

BitVector BitVector::from_coordinates(std::initializer_list<int> coordinates) {
  std::uint32_t value = 0;
  for (int c : coordinates) value = (value << 1) | (c != 0 ? 1u : 0u);
  return BitVector(static_cast<int>(coordinates.size()), value);
}

std::string BitVector::to_string() const {
  std::string out;
  for (int i = 1; i <= width_; ++i) out.push_back((*this)[i] ? '1' : '0');
  return out;
}

std::optional<ErrorCode> validate_gate(LineSet positive, LineSet negative, int target, int n) noexcept {
  if (target < 1 || target > n) return ErrorCode::line_out_of_range;
  if (positive.max_line() > n || negative.max_line() > n) return ErrorCode::line_out_of_range;
  if (!(positive & negative).empty()) return ErrorCode::overlapping_controls;
  if (positive.contains(target) || negative.contains(target)) return ErrorCode::target_is_control;
  return std::nullopt;
}

std::optional<ErrorCode> validate_gate(const Gate& g, int n) noexcept {
  return validate_gate(g.positive(), g.negative(), g.target(), n);
}

Gate::Gate(LineSet positive, LineSet negative, int target) : positive_(positive), negative_(negative), target_(target) {
  if (auto err = validate_gate(positive, negative, target, max_lines)) {
    Gate copy = *this;
    throw Error(*err, copy.to_string());
  }
}

int Gate::max_line() const noexcept {
  const int c = controls().max_line();
  return c > target_ ? c : target_;
}

Gate::StateMasks Gate::state_masks(int n) const noexcept {
  const std::uint32_t pos = state_mask(positive_, n);
  const std::uint32_t neg = state_mask(negative_, n);
  return {pos | neg, pos, state_bit(target_, n)};
}

BitVector Gate::apply(const BitVector& v) const {
  if (auto err = validate_gate(*this, v.width())) throw Error(*err, to_string());
  return BitVector(v.width(), apply(v.value(), v.width()));
}

std::string Gate::to_string() const {
  std::ostringstream os;
  auto list = [&](LineSet s) {
    bool first = true;
    for (int line : s.lines()) {
      if (!first) os << ',';
      os << line;
      first = false;
    }
  };
  os << "TOF(";
  list(positive_);
  os << ';';
  list(negative_);
  os << ';' << target_ << ')';
  return os.str();
}

}  // namespace revsyn

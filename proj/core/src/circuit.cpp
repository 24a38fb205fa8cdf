#include "revsyn/circuit.hpp"

#include <algorithm>

namespace revsyn {

namespace {

void check_lines(int lines) {
  if (lines < 1 || lines > max_lines) throw Error(ErrorCode::line_out_of_range, "circuit line count " + std::to_string(lines));
}

void check_layout(const LineLayout& layout, int lines) {
  if (!layout.names.empty() && static_cast<int>(layout.names.size()) != lines)
    throw Error(ErrorCode::malformed_header, "layout names do not match line count");
  auto in_range = [&](int line) { return line >= 1 && line <= lines; };
  if (!std::all_of(layout.inputs.begin(), layout.inputs.end(), in_range) ||
      !std::all_of(layout.outputs.begin(), layout.outputs.end(), in_range))
    throw Error(ErrorCode::line_out_of_range, "layout references a missing line");
  if (layout.declared()) {
    const auto non_inputs = static_cast<std::size_t>(lines) - layout.inputs.size();
    if (layout.constants.size() != non_inputs)
      throw Error(ErrorCode::malformed_header, "constant count does not match non-input lines");
  }
}

}  // namespace

Circuit::Circuit(int lines) : lines_(lines) { check_lines(lines); }

Circuit::Circuit(int lines, std::vector<Gate> gates) : lines_(lines) {
  check_lines(lines);
  gates_.reserve(gates.size());
  for (const Gate& g : gates) push_back(g);
}

void Circuit::push_back(const Gate& g) {
  if (auto err = validate_gate(g, lines_)) throw Error(*err, g.to_string() + " on " + std::to_string(lines_) + " lines");
  gates_.push_back(g);
}

void Circuit::append(const Circuit& other) {
  if (other.lines_ != lines_) throw Error(ErrorCode::width_mismatch, "appending circuits of different widths");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

void Circuit::prepend(const Circuit& other) {
  if (other.lines_ != lines_) throw Error(ErrorCode::width_mismatch, "prepending circuits of different widths");
  gates_.insert(gates_.begin(), other.gates_.begin(), other.gates_.end());
}

Circuit Circuit::reversed() const {
  Circuit out(lines_);
  out.gates_.assign(gates_.rbegin(), gates_.rend());
  out.layout_ = layout_;
  return out;
}

void Circuit::set_layout(LineLayout layout) {
  check_layout(layout, lines_);
  layout_ = std::move(layout);
}

std::string Circuit::line_name(int line) const {
  if (!layout_.names.empty()) return layout_.names.at(static_cast<std::size_t>(line - 1));
  return "x" + std::to_string(line);
}

std::vector<std::uint32_t> simulate(const Circuit& c, int cap) {
  const int n = c.lines();
  if (cap > hard_simulation_cap) cap = hard_simulation_cap;
  if (n > cap) throw Error(ErrorCode::too_many_lines, std::to_string(n) + " lines exceeds simulation cap " + std::to_string(cap));
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint32_t> table(size);
  for (std::size_t x = 0; x < size; ++x) table[x] = static_cast<std::uint32_t>(x);
  for (const Gate& g : c.gates()) {
    const auto m = g.state_masks(n);
    for (auto& v : table)
      if ((v & m.care) == m.match) v ^= m.flip;
  }
  return table;
}

std::uint32_t evaluate(const Circuit& c, std::uint32_t state) noexcept {
  for (const Gate& g : c.gates()) state = g.apply(state, c.lines());
  return state;
}

BitVector evaluate(const Circuit& c, const BitVector& v) {
  if (v.width() != c.lines()) throw Error(ErrorCode::width_mismatch, "vector width differs from circuit");
  return BitVector(v.width(), evaluate(c, v.value()));
}

}  // namespace revsyn

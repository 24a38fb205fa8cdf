#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "revsyn/gate.hpp"

namespace revsyn {

/// Optional line labelling carried through the file formats. Empty vectors
/// mean "not declared": every line is then both a primary input and an output.
struct LineLayout {
  std::vector<std::string> names;  ///< one per line, or empty for x1..xn
  std::vector<int> inputs;         ///< lines fed by primary inputs, in order
  std::vector<int> outputs;        ///< lines carrying primary outputs, in order
  std::vector<bool> constants;     ///< value of every non-input line, in line order

  [[nodiscard]] bool declared() const noexcept { return !inputs.empty() || !outputs.empty(); }
  friend bool operator==(const LineLayout&, const LineLayout&) = default;
};

/// Ordered gate cascade; gate 0 acts first.
class Circuit {
public:
  explicit Circuit(int lines);
  Circuit(int lines, std::vector<Gate> gates);

  [[nodiscard]] int lines() const noexcept { return lines_; }
  [[nodiscard]] std::span<const Gate> gates() const noexcept { return gates_; }
  [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }
  [[nodiscard]] bool empty() const noexcept { return gates_.empty(); }
  [[nodiscard]] const Gate& operator[](std::size_t i) const { return gates_[i]; }

  void push_back(const Gate& g);
  /// Appends every gate of other (same line count).
  void append(const Circuit& other);
  /// Prepends every gate of other (same line count).
  void prepend(const Circuit& other);

  [[nodiscard]] Circuit reversed() const;

  [[nodiscard]] const LineLayout& layout() const noexcept { return layout_; }
  void set_layout(LineLayout layout);
  /// Name of a 1-based line, falling back to x<i>.
  [[nodiscard]] std::string line_name(int line) const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

private:
  int lines_;
  std::vector<Gate> gates_;
  LineLayout layout_;
};

/// Number of gates.
[[nodiscard]] inline std::size_t gate_complexity(const Circuit& c) noexcept { return c.size(); }

/// Default cap on exhaustive simulation; raise with the overload below.
inline constexpr int default_simulation_cap = 20;
inline constexpr int hard_simulation_cap = 24;

/// Image of every input state: table[x] is the circuit output for input x.
[[nodiscard]] std::vector<std::uint32_t> simulate(const Circuit& c, int cap = default_simulation_cap);

/// Runs the gates in order on a single state.
[[nodiscard]] std::uint32_t evaluate(const Circuit& c, std::uint32_t state) noexcept;
[[nodiscard]] BitVector evaluate(const Circuit& c, const BitVector& v);

}  // namespace revsyn

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "revsyn/error.hpp"

namespace revsyn {

/// Largest number of lines a circuit may declare.
inline constexpr int max_lines = 32;

/// Set of 1-based line indices packed into a word (bit i-1 <=> line i).
class LineSet {
public:
  constexpr LineSet() = default;
  constexpr explicit LineSet(std::uint32_t mask) : mask_(mask) {}
  LineSet(std::initializer_list<int> lines) {
    for (int line : lines) insert(line);
  }

  [[nodiscard]] constexpr std::uint32_t mask() const noexcept { return mask_; }
  [[nodiscard]] constexpr bool empty() const noexcept { return mask_ == 0; }
  [[nodiscard]] constexpr int size() const noexcept { return std::popcount(mask_); }
  [[nodiscard]] constexpr bool contains(int line) const noexcept {
    return line >= 1 && line <= max_lines && ((mask_ >> (line - 1)) & 1u) != 0;
  }

  constexpr void insert(int line) noexcept { mask_ |= bit(line); }
  constexpr void erase(int line) noexcept { mask_ &= ~bit(line); }

  [[nodiscard]] constexpr LineSet with(int line) const noexcept { return LineSet(mask_ | bit(line)); }
  [[nodiscard]] constexpr LineSet without(int line) const noexcept { return LineSet(mask_ & ~bit(line)); }

  /// Largest line index present, 0 when empty.
  [[nodiscard]] constexpr int max_line() const noexcept { return mask_ == 0 ? 0 : 32 - std::countl_zero(mask_); }

  /// Lines in increasing order.
  [[nodiscard]] std::vector<int> lines() const;

  friend constexpr LineSet operator|(LineSet a, LineSet b) noexcept { return LineSet(a.mask_ | b.mask_); }
  friend constexpr LineSet operator&(LineSet a, LineSet b) noexcept { return LineSet(a.mask_ & b.mask_); }
  friend constexpr LineSet operator-(LineSet a, LineSet b) noexcept { return LineSet(a.mask_ & ~b.mask_); }
  friend constexpr bool operator==(LineSet a, LineSet b) noexcept = default;
  friend constexpr auto operator<=>(LineSet a, LineSet b) noexcept = default;

  [[nodiscard]] constexpr bool subset_of(LineSet other) const noexcept { return (mask_ & ~other.mask_) == 0; }

private:
  static constexpr std::uint32_t bit(int line) noexcept { return std::uint32_t{1} << (line - 1); }
  std::uint32_t mask_ = 0;
};

/// Point of the Boolean cube B^n. Coordinate x_1 is the most significant bit
/// of value(), so truth-table row order coincides with lexicographic order.
class BitVector {
public:
  BitVector(int width, std::uint32_t value);
  static BitVector from_coordinates(std::initializer_list<int> coordinates);

  [[nodiscard]] int width() const noexcept { return width_; }
  [[nodiscard]] std::uint32_t value() const noexcept { return value_; }
  /// Coordinate x_i, 1-based.
  [[nodiscard]] bool operator[](int i) const noexcept { return ((value_ >> (width_ - i)) & 1u) != 0; }
  /// Digits x_1..x_n, e.g. "10100".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

private:
  int width_;
  std::uint32_t value_;
};

/// Mask of state bits for a set of lines in an n-line circuit.
[[nodiscard]] constexpr std::uint32_t state_mask(LineSet lines, int n) noexcept {
  std::uint32_t out = 0;
  std::uint32_t m = lines.mask();
  while (m != 0) {
    const int line = std::countr_zero(m) + 1;
    out |= std::uint32_t{1} << (n - line);
    m &= m - 1;
  }
  return out;
}

[[nodiscard]] constexpr std::uint32_t state_bit(int line, int n) noexcept { return std::uint32_t{1} << (n - line); }

/// Inverse of state_mask.
[[nodiscard]] constexpr LineSet lines_of(std::uint32_t state_bits, int n) noexcept {
  LineSet out;
  while (state_bits != 0) {
    const int bit = std::countr_zero(state_bits);
    out.insert(n - bit);
    state_bits &= state_bits - 1;
  }
  return out;
}

/// Generalized Toffoli gate TOF(I;J;t): flips line t when every line of I is 1
/// and every line of J is 0.
class Gate {
public:
  Gate(LineSet positive, LineSet negative, int target);

  static Gate not_gate(int target) { return Gate({}, {}, target); }
  static Gate cnot(int control, int target) { return Gate(LineSet{control}, {}, target); }
  static Gate toffoli(int c1, int c2, int target) { return Gate(LineSet{c1, c2}, {}, target); }

  [[nodiscard]] LineSet positive() const noexcept { return positive_; }
  [[nodiscard]] LineSet negative() const noexcept { return negative_; }
  [[nodiscard]] LineSet controls() const noexcept { return positive_ | negative_; }
  [[nodiscard]] int target() const noexcept { return target_; }
  [[nodiscard]] int control_count() const noexcept { return controls().size(); }
  /// Highest line index the gate touches.
  [[nodiscard]] int max_line() const noexcept;

  /// Precomputed masks for evaluating the gate on integer states.
  struct StateMasks {
    std::uint32_t care;
    std::uint32_t match;
    std::uint32_t flip;
  };
  [[nodiscard]] StateMasks state_masks(int n) const noexcept;

  [[nodiscard]] std::uint32_t apply(std::uint32_t state, int n) const noexcept {
    const StateMasks m = state_masks(n);
    return (state & m.care) == m.match ? state ^ m.flip : state;
  }
  [[nodiscard]] BitVector apply(const BitVector& v) const;

  /// Human-readable TOF notation, e.g. "TOF(1;2;3)".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Gate&, const Gate&) = default;
  friend auto operator<=>(const Gate&, const Gate&) = default;

private:
  LineSet positive_;
  LineSet negative_;
  int target_;
};

/// Checks the gate constraints for an n-line circuit; nullopt means valid.
[[nodiscard]] std::optional<ErrorCode> validate_gate(LineSet positive, LineSet negative, int target, int n) noexcept;
[[nodiscard]] std::optional<ErrorCode> validate_gate(const Gate& g, int n) noexcept;

}  // namespace revsyn

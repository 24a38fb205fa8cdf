#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "revsyn/circuit.hpp"

namespace revsyn {

/// Cycle of cube points (integer-encoded, x_1 most significant).
using Cycle = std::vector<std::uint32_t>;

/// Unordered pair of distinct points, stored with a < b.
struct Transposition {
  std::uint32_t a;
  std::uint32_t b;

  Transposition(std::uint32_t x, std::uint32_t y);
  [[nodiscard]] bool touches(std::uint32_t v) const noexcept { return a == v || b == v; }
  [[nodiscard]] bool independent_of(const Transposition& o) const noexcept {
    return a != o.a && a != o.b && b != o.a && b != o.b;
  }
  [[nodiscard]] std::uint32_t difference() const noexcept { return a ^ b; }

  friend bool operator==(const Transposition&, const Transposition&) = default;
  friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

enum class Parity { even, odd };

/// Bijection on B^n held as a dense image table.
///
/// Products are left-associative: compose(f, g) applies f first, then g.
class Permutation {
public:
  static Permutation identity(int width);
  /// Throws not_bijective unless table is a permutation of 0..2^n-1.
  static Permutation from_table(std::vector<std::uint32_t> table);
  /// Product of the given (disjoint or not) cycles, left to right.
  static Permutation from_cycles(int width, std::span<const Cycle> cycles);
  static Permutation from_transpositions(int width, std::span<const Transposition> ts);
  static Permutation of(const Circuit& c);

  [[nodiscard]] int width() const noexcept { return width_; }
  [[nodiscard]] std::size_t size() const noexcept { return image_.size(); }
  [[nodiscard]] std::uint32_t operator()(std::uint32_t x) const { return image_[x]; }
  [[nodiscard]] const std::vector<std::uint32_t>& table() const noexcept { return image_; }

  /// Disjoint cycles without fixed points; each starts at its smallest point
  /// and cycles are ordered by that point.
  [[nodiscard]] std::vector<Cycle> cycles() const;
  [[nodiscard]] Permutation inverse() const;
  [[nodiscard]] bool is_identity() const noexcept;
  /// Minimal number of transpositions, i.e. sum of (cycle length - 1).
  [[nodiscard]] std::size_t distance() const;
  [[nodiscard]] std::size_t moved_points() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  Permutation(int width, std::vector<std::uint32_t> image) : width_(width), image_(std::move(image)) {}

  int width_;
  std::vector<std::uint32_t> image_;
};

/// (f ∘ g)(x) = g(f(x)).
[[nodiscard]] Permutation compose(const Permutation& f, const Permutation& g);
[[nodiscard]] Parity parity(const Permutation& p);
/// Returns h^-1 ∘ p ∘ h where h is the permutation of e; relabels every point x as h(x).
[[nodiscard]] Permutation conjugate(const Permutation& p, const Gate& e);
[[nodiscard]] Permutation conjugate(const Permutation& p, const Circuit& e);

[[nodiscard]] inline Parity operator^(Parity a, Parity b) noexcept { return a == b ? Parity::even : Parity::odd; }

}  // namespace revsyn

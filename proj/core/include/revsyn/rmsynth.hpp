#pragma once

#include <functional>
#include <vector>

#include "revsyn/synth.hpp"

namespace revsyn {

/// Truth table being driven to the identity, with its inverse for lookups.
class WorkTable {
public:
  explicit WorkTable(const Permutation& p);

  [[nodiscard]] int width() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return t_.size(); }
  [[nodiscard]] std::uint32_t operator[](std::uint32_t x) const { return t_[x]; }
  [[nodiscard]] std::uint32_t preimage(std::uint32_t y) const { return inv_[y]; }
  [[nodiscard]] const std::vector<std::uint32_t>& table() const noexcept { return t_; }
  /// First row not mapped to itself (size() when done).
  [[nodiscard]] std::uint32_t frontier() const noexcept;
  /// T[j] = j for all j <= i.
  [[nodiscard]] bool fixed_through(std::uint32_t i) const noexcept;

  /// T[x] <- g(T[x]) for every row.
  void apply_output_gate(const Gate& g);
  /// Exchanges the values a and b wherever they occur.
  void swap_values(std::uint32_t a, std::uint32_t b);
  /// Exchanges rows a and b.
  void swap_rows(std::uint32_t a, std::uint32_t b);

private:
  int n_;
  std::vector<std::uint32_t> t_;
  std::vector<std::uint32_t> inv_;
};

/// Gates (in the order applied to the table) that bring row i to itself
/// without disturbing earlier rows. Throws precondition_violated when an
/// earlier row is not fixed.
std::vector<Gate> fix_row(WorkTable& t, std::uint32_t i);

using RowObserver = std::function<void(const WorkTable&, std::uint32_t row)>;

/// Transformation-based synthesis; the observer sees the table after each row.
[[nodiscard]] Circuit rm_synthesize(const Permutation& p, const RowObserver& observer = {});

struct PushRecord {
  Transposition transposition;
  Side side;
  std::size_t order;
};

/// Right: swap the values i and k = T[i]. Left: swap rows i and l = T^-1[i].
PushRecord push_row(WorkTable& t, std::uint32_t i, Side side, std::size_t order = 0);

enum class PushPolicy { right_only, left_only, alternate };

struct CombineParams {
  int weight_threshold = 1;
  PushPolicy policy = PushPolicy::right_only;
  SynthParams synth;  ///< used for the pushed parts; odd parts are allowed
};

struct CombineResult {
  Circuit circuit;
  std::vector<PushRecord> pushes;
  std::size_t left_gates = 0;
  std::size_t rm_gates = 0;
  std::size_t right_gates = 0;
};

/// Rows whose index has Hamming weight >= w are pushed to the cycle engine,
/// the rest are fixed as in rm_synthesize.
[[nodiscard]] CombineResult combined_synthesize_detailed(const Permutation& p, const CombineParams& params = {});
[[nodiscard]] Circuit combined_synthesize(const Permutation& p, const CombineParams& params = {});

}  // namespace revsyn

#pragma once

#include <cstdint>
#include <vector>

#include "revsyn/cycles.hpp"

namespace revsyn {

/// 2K x n binary matrix of a transposition group, rows x_1, y_1, ..., x_K, y_K.
struct GroupMatrix {
  enum class Stage { raw, deduped, canonical, final };

  int n = 0;
  std::vector<std::uint32_t> rows;
  Stage stage = Stage::raw;

  [[nodiscard]] std::size_t pairs() const noexcept { return rows.size() / 2; }
  /// Column of line j as a bit string over the rows (row 0 is bit 0).
  [[nodiscard]] std::uint64_t column(int line) const;
};

[[nodiscard]] GroupMatrix build_matrix(int n, const TranspositionGroup& g);

struct Conjugated {
  GroupMatrix matrix;
  Circuit conjugator;  ///< new row = conjugator applied to old row
};

/// Zeroes every nonzero column equal to an earlier one with CNOT(i -> j).
[[nodiscard]] Conjugated zero_duplicate_columns(const GroupMatrix& m);

/// Conjugates every pair into rows differing only at t, then packs the
/// pair addresses into a subcube so a single gate can finish the group.
/// Gates may carry negative controls. Throws canonicalization_failed when
/// more than n^2 gates would be needed or no placement exists.
[[nodiscard]] Conjugated to_canonical_form(const GroupMatrix& m, int t);

struct FinalStage {
  Circuit not_conjugator;  ///< NOT gates on constant-0 columns outside `distinct`
  Gate final_gate;
};

/// Lines whose column is not constant.
[[nodiscard]] LineSet distinct_columns(const GroupMatrix& m);

/// Single gate realizing a canonical matrix's transpositions.
[[nodiscard]] FinalStage realize_final(const GroupMatrix& m, LineSet distinct, int t);

/// Same as realize_final with the NOT stage folded into negative controls.
[[nodiscard]] Gate final_gate_with_polarity(const GroupMatrix& m, LineSet distinct, int t);

/// Circuit E + final + E^-1 for the group. Tries every nonconstant target
/// column, with and without column deduplication, and keeps the shortest.
/// Groups whose size is not a power of two are realized as power-of-two
/// subgroups.
[[nodiscard]] Circuit realize_group(int n, const TranspositionGroup& g);

/// Rewrites gates with more than two controls into Toffoli gates using
/// dirty spare lines (Barenco et al., lemmas 7.2/7.3); negative controls are
/// wrapped in NOT gates first. Gates with no spare line stay as they are.
[[nodiscard]] Circuit decompose_to_nct(const Circuit& c);

}  // namespace revsyn

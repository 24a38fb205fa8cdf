#include "revsyn/spec.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace revsyn {

TruthTable TruthTable::from_permutation(const Permutation& p) {
  TruthTable t;
  t.inputs = t.outputs = p.width();
  const std::uint32_t all = (std::uint32_t{1} << p.width()) - 1;
  t.care.assign(p.size(), all);
  t.value = p.table();
  return t;
}

bool TruthTable::is_bijection() const {
  if (inputs != outputs) return false;
  const std::uint32_t all = (std::uint32_t{1} << outputs) - 1;
  std::vector<bool> seen(value.size(), false);
  for (std::size_t x = 0; x < value.size(); ++x) {
    if (care[x] != all || value[x] >= seen.size() || seen[value[x]]) return false;
    seen[value[x]] = true;
  }
  return true;
}

bool TruthTable::realized_by(const Circuit& c) const {
  const int n = c.lines();
  const LineLayout& layout = c.layout();
  std::vector<int> in_lines;
  std::vector<int> out_lines;
  std::uint32_t constant_bits = 0;
  if (layout.declared()) {
    in_lines = layout.inputs;
    out_lines = layout.outputs;
    std::size_t ci = 0;
    for (int l = 1; l <= n; ++l) {
      if (std::find(in_lines.begin(), in_lines.end(), l) != in_lines.end()) continue;
      if (ci < layout.constants.size() && layout.constants[ci]) constant_bits |= state_bit(l, n);
      ++ci;
    }
  } else {
    in_lines.resize(static_cast<std::size_t>(n));
    std::iota(in_lines.begin(), in_lines.end(), 1);
    out_lines = in_lines;
  }
  if (static_cast<int>(in_lines.size()) != inputs || static_cast<int>(out_lines.size()) != outputs) return false;

  for (std::uint32_t x = 0; x < (std::uint32_t{1} << inputs); ++x) {
    std::uint32_t state = constant_bits;
    for (int i = 1; i <= inputs; ++i)
      if ((x >> (inputs - i)) & 1u) state |= state_bit(in_lines[static_cast<std::size_t>(i - 1)], n);
    const std::uint32_t y = evaluate(c, state);
    for (int j = 1; j <= outputs; ++j) {
      const std::uint32_t col = std::uint32_t{1} << (outputs - j);
      if ((care[x] & col) == 0) continue;
      const bool got = (y & state_bit(out_lines[static_cast<std::size_t>(j - 1)], n)) != 0;
      if (got != ((value[x] & col) != 0)) return false;
    }
  }
  return true;
}

namespace {

// Spreads the low bits of `index` onto the set bits of `mask`.
std::uint32_t deposit(std::uint32_t index, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (std::uint32_t m = mask; m != 0; m &= m - 1, index >>= 1)
    if (index & 1u) out |= m & (~m + 1);
  return out;
}

struct Attempt {
  std::vector<std::uint32_t> image;  // per constrained row
  std::size_t distance = 0;
};

std::optional<Attempt> place_rows(const TruthTable& spec, int lines, const std::vector<int>& out_lines, const std::vector<std::uint32_t>& order) {
  const int n = spec.inputs;
  std::vector<bool> used(std::size_t{1} << lines, false);
  Attempt at;
  at.image.assign(order.size(), 0);
  const std::uint32_t all = (std::uint32_t{1} << lines) - 1;
  for (std::uint32_t x : order) {
    const std::uint32_t from = x << (lines - n);
    std::uint32_t fixed_mask = 0;
    std::uint32_t fixed_val = 0;
    for (int j = 1; j <= spec.outputs; ++j) {
      const std::uint32_t col = std::uint32_t{1} << (spec.outputs - j);
      if ((spec.care[x] & col) == 0) continue;
      const std::uint32_t b = state_bit(out_lines[static_cast<std::size_t>(j - 1)], lines);
      fixed_mask |= b;
      if (spec.value[x] & col) fixed_val |= b;
    }
    const std::uint32_t free = all & ~fixed_mask;
    const std::uint32_t want = (from & free) | fixed_val;
    const int f = std::popcount(free);
    bool placed = false;
    for (int k = 0; k <= f && !placed; ++k) {
      if (k == 0) {
        if (!used[want]) {
          at.image[x] = want;
          placed = true;
        }
        continue;
      }
      // Gosper's hack over k-subsets of the f free positions.
      for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < (std::uint64_t{1} << f);) {
        const std::uint32_t y = want ^ deposit(static_cast<std::uint32_t>(s), free);
        if (!used[y]) {
          at.image[x] = y;
          placed = true;
          break;
        }
        const std::uint64_t c = s & (~s + 1);
        const std::uint64_t r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
      }
    }
    if (!placed) return std::nullopt;
    used[at.image[x]] = true;
    at.distance += static_cast<std::size_t>(std::popcount(at.image[x] ^ from));
  }
  return at;
}

}  // namespace

Embedding extend_to_bijection(const TruthTable& spec, int lines) { return extend_to_bijection(spec, lines, {}); }

Embedding extend_to_bijection(const TruthTable& spec, int lines, const EmbeddingOptions& options) {
  const int n = spec.inputs;
  const int m = spec.outputs;
  if (n < 1 || m < 1 || lines < std::max(n, m) || lines > hard_simulation_cap)
    throw Error(ErrorCode::infeasible_spec, std::to_string(n) + " inputs / " + std::to_string(m) + " outputs on " + std::to_string(lines) + " lines");
  if (spec.care.size() != (std::size_t{1} << n) || spec.value.size() != spec.care.size())
    throw Error(ErrorCode::row_count_mismatch, "truth table has the wrong number of rows");

  LineLayout layout;
  for (int l = 1; l <= n; ++l) layout.inputs.push_back(l);
  layout.constants.assign(static_cast<std::size_t>(lines - n), false);

  if (lines == n && spec.is_bijection()) {
    layout.outputs = layout.inputs;
    return {Permutation::from_table(spec.value), layout};
  }

  std::vector<std::uint32_t> natural(spec.care.size());
  std::iota(natural.begin(), natural.end(), 0);
  // Rows with the most common output patterns go first on the retry.
  std::vector<std::uint32_t> by_frequency = natural;
  {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> freq;
    for (std::uint32_t x : natural) ++freq[{spec.care[x], spec.value[x] & spec.care[x]}];
    std::stable_sort(by_frequency.begin(), by_frequency.end(), [&](std::uint32_t a, std::uint32_t b) {
      return freq[{spec.care[a], spec.value[a] & spec.care[a]}] > freq[{spec.care[b], spec.value[b] & spec.care[b]}];
    });
  }

  std::vector<int> assign(static_cast<std::size_t>(m));
  std::iota(assign.begin(), assign.end(), lines - m + 1);
  const bool fixed_order = !options.output_lines.empty();
  if (fixed_order) {
    if (static_cast<int>(options.output_lines.size()) != m) throw Error(ErrorCode::infeasible_spec, "one output line per column expected");
    for (int l : options.output_lines)
      if (l < 1 || l > lines || std::count(options.output_lines.begin(), options.output_lines.end(), l) != 1)
        throw Error(ErrorCode::infeasible_spec, "bad output line list");
    assign = options.output_lines;
  }
  std::optional<Attempt> best;
  std::vector<int> best_assign;
  do {
    for (const auto* order : {&natural, &by_frequency}) {
      auto at = place_rows(spec, lines, assign, *order);
      if (!at) continue;
      if (!best || at->distance < best->distance) {
        best = std::move(at);
        best_assign = assign;
      }
      break;
    }
  } while (!fixed_order && m <= 4 && std::next_permutation(assign.begin(), assign.end()));
  if (!best) throw Error(ErrorCode::infeasible_spec, "no consistent embedding on " + std::to_string(lines) + " lines");
  layout.outputs = best_assign;

  const std::size_t size = std::size_t{1} << lines;
  std::vector<std::uint32_t> table(size, 0);
  std::vector<bool> domain_done(size, false);
  std::set<std::uint32_t> free_images;
  for (std::uint32_t y = 0; y < size; ++y) free_images.insert(y);
  for (std::uint32_t x : natural) {
    const std::uint32_t from = x << (lines - n);
    table[from] = best->image[x];
    domain_done[from] = true;
    free_images.erase(best->image[x]);
  }
  std::vector<std::uint32_t> pending;
  for (std::uint32_t d = 0; d < size; ++d) {
    if (domain_done[d]) continue;
    if (free_images.erase(d) != 0) table[d] = d;
    else pending.push_back(d);
  }
  for (std::uint32_t d : pending) {
    std::optional<std::uint32_t> pick;
    for (int i = 0; i < lines && !pick; ++i)
      if (free_images.contains(d ^ (1u << i))) pick = d ^ (1u << i);
    for (int i = 0; i < lines && !pick; ++i)
      for (int j = i + 1; j < lines && !pick; ++j)
        if (free_images.contains(d ^ (1u << i) ^ (1u << j))) pick = d ^ (1u << i) ^ (1u << j);
    if (!pick) pick = *free_images.begin();
    table[d] = *pick;
    free_images.erase(*pick);
  }
  if (options.prefer_even && size - natural.size() >= 2) {
    Permutation p = Permutation::from_table(table);
    if (parity(p) == Parity::odd) {
      // Any two points outside the constrained rows will do; take the last two.
      std::vector<std::uint32_t> loose;
      for (std::uint32_t d = static_cast<std::uint32_t>(size); d-- > 0 && loose.size() < 2;)
        if (!domain_done[d]) loose.push_back(d);
      std::swap(table[loose[0]], table[loose[1]]);
    }
  }
  return {Permutation::from_table(std::move(table)), layout};
}

Embedding xor_embedding(const TruthTable& spec, int lines, const std::vector<std::pair<int, int>>& overwrite) {
  const int n = spec.inputs;
  const int m = spec.outputs;
  if (n < 1 || m < 1 || lines < std::max(n, m) || lines > hard_simulation_cap)
    throw Error(ErrorCode::infeasible_spec, std::to_string(n) + " inputs / " + std::to_string(m) + " outputs on " + std::to_string(lines) + " lines");
  if (spec.care.size() != (std::size_t{1} << n) || spec.value.size() != spec.care.size())
    throw Error(ErrorCode::row_count_mismatch, "truth table has the wrong number of rows");

  const std::uint32_t rows = std::uint32_t{1} << n;
  auto bit = [&](std::uint32_t x, int j) { return ((spec.value[x] & spec.care[x]) >> (m - j)) & 1u; };
  std::vector<int> on_line(static_cast<std::size_t>(m) + 1, 0);  // column -> overwritten input line
  std::vector<int> col_of(static_cast<std::size_t>(n) + 1, 0);   // input line -> column

  auto input_image = [&](std::uint32_t x) {
    for (int i = 1; i <= n; ++i)
      if (int j = col_of[static_cast<std::size_t>(i)]; j != 0) {
        const std::uint32_t b = std::uint32_t{1} << (n - i);
        x = bit(x, j) ? (x | b) : (x & ~b);
      }
    return x;
  };
  auto injective = [&] {
    std::vector<bool> seen(rows, false);
    for (std::uint32_t x = 0; x < rows; ++x) {
      const std::uint32_t y = input_image(x);
      if (seen[y]) return false;
      seen[y] = true;
    }
    return true;
  };

  const int need = std::max(0, n + m - lines);
  if (!overwrite.empty()) {
    for (auto [j, i] : overwrite) {
      if (j < 1 || j > m || i < 1 || i > n || on_line[static_cast<std::size_t>(j)] != 0 || col_of[static_cast<std::size_t>(i)] != 0)
        throw Error(ErrorCode::infeasible_spec, "bad overwrite pair");
      on_line[static_cast<std::size_t>(j)] = i;
      col_of[static_cast<std::size_t>(i)] = j;
    }
    if (static_cast<int>(overwrite.size()) < need || !injective())
      throw Error(ErrorCode::infeasible_spec, "overwritten inputs are not recoverable");
  } else {
    // Last column onto the last input first, mirroring the usual placement of
    // a sum bit.
    int placed = 0;
    for (int j = m; j >= 1 && placed < need; --j)
      for (int i = n; i >= 1; --i) {
        if (col_of[static_cast<std::size_t>(i)] != 0) continue;
        col_of[static_cast<std::size_t>(i)] = j;
        if (injective()) {
          on_line[static_cast<std::size_t>(j)] = i;
          ++placed;
          break;
        }
        col_of[static_cast<std::size_t>(i)] = 0;
      }
    if (placed < need) throw Error(ErrorCode::infeasible_spec, "no output can overwrite an input on " + std::to_string(lines) + " lines");
  }

  LineLayout layout;
  for (int l = 1; l <= n; ++l) layout.inputs.push_back(l);
  layout.constants.assign(static_cast<std::size_t>(lines - n), false);
  int next_free = n + 1;
  for (int j = 1; j <= m; ++j)
    layout.outputs.push_back(on_line[static_cast<std::size_t>(j)] != 0 ? on_line[static_cast<std::size_t>(j)] : next_free++);

  const int k = lines - n;
  std::vector<std::uint32_t> table(std::size_t{1} << lines);
  for (std::uint32_t x = 0; x < rows; ++x) {
    std::uint32_t flip = 0;
    for (int j = 1; j <= m; ++j)
      if (on_line[static_cast<std::size_t>(j)] == 0 && bit(x, j)) flip |= state_bit(layout.outputs[static_cast<std::size_t>(j - 1)], lines);
    const std::uint32_t hi = input_image(x) << k;
    for (std::uint32_t c = 0; c < (std::uint32_t{1} << k); ++c) table[(x << k) | c] = hi | (c ^ flip);
  }
  return {Permutation::from_table(std::move(table)), layout};
}

}  // namespace revsyn

#include "revsyn/permutation.hpp"

#include <algorithm>
#include <bit>

namespace revsyn {

Transposition::Transposition(std::uint32_t x, std::uint32_t y) : a(std::min(x, y)), b(std::max(x, y)) {
  if (x == y) throw Error(ErrorCode::precondition_violated, "transposition of a point with itself");
}

Permutation Permutation::identity(int width) {
  if (width < 1 || width > hard_simulation_cap) throw Error(ErrorCode::too_many_lines, "permutation width " + std::to_string(width));
  std::vector<std::uint32_t> image(std::size_t{1} << width);
  for (std::size_t x = 0; x < image.size(); ++x) image[x] = static_cast<std::uint32_t>(x);
  return Permutation(width, std::move(image));
}

Permutation Permutation::from_table(std::vector<std::uint32_t> table) {
  const std::size_t size = table.size();
  if (size < 2 || !std::has_single_bit(size)) throw Error(ErrorCode::not_bijective, "table size is not a power of two");
  const int width = std::countr_zero(size);
  if (width > hard_simulation_cap) throw Error(ErrorCode::too_many_lines, "table too large");
  std::vector<bool> seen(size, false);
  for (std::uint32_t v : table) {
    if (v >= size || seen[v]) throw Error(ErrorCode::not_bijective, "value " + std::to_string(v) + " repeated or out of range");
    seen[v] = true;
  }
  return Permutation(width, std::move(table));
}

Permutation Permutation::from_cycles(int width, std::span<const Cycle> cycles) {
  Permutation out = identity(width);
  for (const Cycle& c : cycles) {
    if (c.size() < 2) continue;
    // Acting after the accumulated product: remap values through the cycle.
    std::vector<std::uint32_t> next(out.size());
    for (std::size_t x = 0; x < next.size(); ++x) next[x] = static_cast<std::uint32_t>(x);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= out.size()) throw Error(ErrorCode::width_mismatch, "cycle point outside the cube");
      next[c[i]] = c[(i + 1) % c.size()];
    }
    for (auto& v : out.image_) v = next[v];
  }
  // A cycle listing a point twice would silently produce garbage.
  std::vector<bool> seen(out.size(), false);
  for (std::uint32_t v : out.image_) {
    if (seen[v]) throw Error(ErrorCode::not_bijective, "cycle repeats a point");
    seen[v] = true;
  }
  return out;
}

Permutation Permutation::from_transpositions(int width, std::span<const Transposition> ts) {
  Permutation out = identity(width);
  for (const Transposition& t : ts) {
    if (t.b >= out.size()) throw Error(ErrorCode::width_mismatch, "transposition outside the cube");
    for (auto& v : out.image_) {
      if (v == t.a) v = t.b;
      else if (v == t.b) v = t.a;
    }
  }
  return out;
}

Permutation Permutation::of(const Circuit& c) { return Permutation(c.lines(), simulate(c, hard_simulation_cap)); }

std::vector<Cycle> Permutation::cycles() const {
  std::vector<Cycle> out;
  std::vector<bool> seen(size(), false);
  for (std::uint32_t x = 0; x < size(); ++x) {
    if (seen[x] || image_[x] == x) continue;
    Cycle c;
    for (std::uint32_t y = x; !seen[y]; y = image_[y]) {
      seen[y] = true;
      c.push_back(y);
    }
    out.push_back(std::move(c));
  }
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(size());
  for (std::uint32_t x = 0; x < size(); ++x) inv[image_[x]] = x;
  return Permutation(width_, std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::uint32_t x = 0; x < size(); ++x)
    if (image_[x] != x) return false;
  return true;
}

std::size_t Permutation::distance() const {
  std::size_t total = 0;
  std::vector<bool> seen(size(), false);
  for (std::uint32_t x = 0; x < size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::uint32_t y = x; !seen[y]; y = image_[y]) {
      seen[y] = true;
      ++len;
    }
    total += len - 1;
  }
  return total;
}

std::size_t Permutation::moved_points() const noexcept {
  std::size_t n = 0;
  for (std::uint32_t x = 0; x < size(); ++x) n += image_[x] != x ? 1 : 0;
  return n;
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.width() != g.width()) throw Error(ErrorCode::width_mismatch, "composing permutations of different widths");
  std::vector<std::uint32_t> out(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) out[x] = g(f(x));
  return Permutation::from_table(std::move(out));
}

Parity parity(const Permutation& p) { return p.distance() % 2 == 0 ? Parity::even : Parity::odd; }

Permutation conjugate(const Permutation& p, const Gate& e) {
  Circuit c(p.width());
  c.push_back(e);
  return conjugate(p, c);
}

Permutation conjugate(const Permutation& p, const Circuit& e) {
  if (e.lines() != p.width()) throw Error(ErrorCode::width_mismatch, "conjugating by a circuit of another width");
  const auto h = simulate(e, hard_simulation_cap);
  std::vector<std::uint32_t> out(p.size());
  for (std::uint32_t x = 0; x < p.size(); ++x) out[h[x]] = h[p(x)];
  return Permutation::from_table(std::move(out));
}

}  // namespace revsyn

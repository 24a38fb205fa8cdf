#include "revsyn/hypercube.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_set>

namespace revsyn {

LineSet CubeDescriptor::free_lines(int n) const {
  const LineSet all(n >= 32 ? ~0u : (1u << n) - 1);
  return all - fixed_positive - fixed_negative - toggles;
}

namespace {

struct Grown {
  std::uint32_t base;
  std::uint32_t span;  // state bits spanning the cube vertices (includes all but one toggle)
  std::uint32_t mask;  // toggle mask m
};

std::vector<std::uint32_t> vertices(const Grown& g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t sub = g.span;; sub = (sub - 1) & g.span) {
    out.push_back(g.base ^ sub);
    if (sub == 0) break;
  }
  return out;
}

HypercubeHit to_hit(const Grown& g, int n) {
  HypercubeHit hit{{}, Circuit(n), {}};
  const std::uint32_t all = n >= 32 ? ~0u : (1u << n) - 1;
  const std::uint32_t fixed = all & ~g.span & ~g.mask;
  hit.cube.toggles = lines_of(g.mask, n);
  hit.cube.fixed_positive = lines_of(fixed & g.base, n);
  hit.cube.fixed_negative = lines_of(fixed & ~g.base, n);
  for (int d : hit.cube.toggles.lines()) hit.gates.push_back(Gate(hit.cube.fixed_positive, hit.cube.fixed_negative, d));
  for (std::uint32_t v : vertices(g)) hit.consumed.emplace_back(v, v ^ g.mask);
  std::sort(hit.consumed.begin(), hit.consumed.end());
  return hit;
}

}  // namespace

std::vector<HypercubeHit> hypercube_candidates(int n, std::span<const Transposition> pool, const HypercubeLimits& limits) {
  std::map<std::uint32_t, std::vector<std::uint32_t>> by_mask;  // mask -> smaller points
  std::map<std::uint32_t, std::unordered_set<std::uint32_t>> members;
  for (const auto& t : pool) {
    const std::uint32_t m = t.difference();
    if (members[m].insert(t.a).second) {
      members[m].insert(t.b);
      by_mask[m].push_back(t.a);
    }
  }

  std::vector<Grown> found;
  for (auto& [mask, seeds] : by_mask) {
    const auto& have = members[mask];
    auto covered = [&](std::uint32_t v) { return have.contains(v) && have.contains(v ^ mask); };
    std::sort(seeds.begin(), seeds.end());
    std::unordered_set<std::uint32_t> used;  // vertices already inside a cube for this mask
    std::size_t tried = 0;
    for (std::uint32_t seed : seeds) {
      if (used.contains(seed)) continue;
      if (++tried > limits.max_seeds) break;
      Grown g{seed, 0, mask};
      // All toggles but the highest one also span the cube.
      const std::uint32_t toggles_but_one = mask & ~std::bit_floor(mask);
      bool ok = true;
      for (std::uint32_t b = toggles_but_one; b != 0 && ok; b &= b - 1) {
        const std::uint32_t e = b & -b;
        Grown next = g;
        next.span |= e;
        for (std::uint32_t v : vertices(next)) ok = ok && covered(v);
        if (ok) g = next;
      }
      if (!ok) continue;
      for (int bit = n - 1; bit >= 0; --bit) {
        const std::uint32_t e = std::uint32_t{1} << bit;
        if ((mask & e) != 0 || (g.span & e) != 0) continue;
        bool all = true;
        for (std::uint32_t v : vertices(g)) {
          if (!covered(v ^ e)) {
            all = false;
            break;
          }
        }
        if (all) g.span |= e;
      }
      for (std::uint32_t v : vertices(g)) {
        used.insert(v);
        used.insert(v ^ mask);
      }
      const std::size_t pairs = std::size_t{1} << std::popcount(g.span);
      if (static_cast<std::size_t>(std::popcount(mask)) < limits.acceptance_ratio * pairs) found.push_back(g);
    }
  }
  std::stable_sort(found.begin(), found.end(), [](const Grown& a, const Grown& b) {
    const int pa = std::popcount(a.span);
    const int pb = std::popcount(b.span);
    if (pa != pb) return pa > pb;
    return std::popcount(a.mask) < std::popcount(b.mask);
  });
  std::vector<HypercubeHit> out;
  out.reserve(found.size());
  for (const auto& g : found) out.push_back(to_hit(g, n));
  return out;
}

std::optional<HypercubeHit> find_hypercube(int n, std::span<const Transposition> pool, const HypercubeLimits& limits) {
  auto all = hypercube_candidates(n, pool, limits);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

}  // namespace revsyn

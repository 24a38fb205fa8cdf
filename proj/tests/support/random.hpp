#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "revsyn/circuit.hpp"
#include "revsyn/permutation.hpp"

namespace revsyn::testing {

// Random valid gate on n lines; each non-target line is a positive control,
// a negative control or unused.
inline Gate random_gate(std::mt19937& rng, int n, int max_controls = 32) {
  std::uniform_int_distribution<int> line(1, n);
  std::uniform_int_distribution<int> role(0, 2);
  const int t = line(rng);
  LineSet pos, neg;
  int used = 0;
  for (int l = 1; l <= n; ++l) {
    if (l == t || used >= max_controls) continue;
    switch (role(rng)) {
      case 1: pos.insert(l), ++used; break;
      case 2: neg.insert(l), ++used; break;
      default: break;
    }
  }
  return Gate(pos, neg, t);
}

inline Circuit random_circuit(std::mt19937& rng, int n, std::size_t gates, int max_controls = 32) {
  Circuit c(n);
  for (std::size_t i = 0; i < gates; ++i) c.push_back(random_gate(rng, n, max_controls));
  return c;
}

inline Permutation random_permutation(std::mt19937& rng, int n) {
  std::vector<std::uint32_t> t(std::size_t{1} << n);
  std::iota(t.begin(), t.end(), 0u);
  std::shuffle(t.begin(), t.end(), rng);
  return Permutation::from_table(std::move(t));
}

inline Permutation random_even_permutation(std::mt19937& rng, int n) {
  Permutation p = random_permutation(rng, n);
  if (parity(p) == Parity::even) return p;
  auto t = p.table();
  std::swap(t[0], t[1]);
  return Permutation::from_table(std::move(t));
}

}  // namespace revsyn::testing

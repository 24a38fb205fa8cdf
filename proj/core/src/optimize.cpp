#include "revsyn/optimize.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_set>

namespace revsyn {

std::string_view to_string(RuleId r) noexcept {
  switch (r) {
    case RuleId::expand_nots: return "ExpandNots";
    case RuleId::expand_subsets: return "ExpandSubsets";
    case RuleId::merge_drop: return "MergeDrop";
    case RuleId::merge_to_negative: return "MergeToNegative";
    case RuleId::merge_to_positive: return "MergeToPositive";
    case RuleId::reduce_swap_pair: return "ReduceSwapPair";
    case RuleId::reduce_flip_pair: return "ReduceFlipPair";
    case RuleId::interchange_three_gate: return "InterchangeThreeGate";
    case RuleId::interchange_polarity_flip: return "InterchangePolarityFlip";
    case RuleId::cancel_identical: return "CancelIdentical";
  }
  return "?";
}

bool independent(const Gate& a, const Gate& b) noexcept {
  const bool targets_free = !b.controls().contains(a.target()) && !a.controls().contains(b.target());
  const bool contradict = !(a.positive() & b.negative()).empty() || !(b.positive() & a.negative()).empty();
  return targets_free || contradict;
}

std::vector<Gate> expand_to_nct(const Gate& g, ExpandVariant variant) {
  const auto neg = g.negative().lines();
  std::vector<Gate> out;
  if (variant == ExpandVariant::nots) {
    for (int j : neg) out.push_back(Gate::not_gate(j));
    out.emplace_back(g.controls(), LineSet{}, g.target());
    for (auto it = neg.rbegin(); it != neg.rend(); ++it) out.push_back(Gate::not_gate(*it));
    return out;
  }
  for (std::uint32_t sub = 0; sub < (1u << neg.size()); ++sub) {
    LineSet pos = g.positive();
    for (std::size_t b = 0; b < neg.size(); ++b)
      if ((sub >> b) & 1u) pos.insert(neg[b]);
    out.emplace_back(pos, LineSet{}, g.target());
  }
  return out;
}

namespace {

// Single line k with a == b ∪ {k}, or 0.
int extra_line(LineSet a, LineSet b) {
  if (!b.subset_of(a)) return 0;
  const LineSet d = a - b;
  return d.size() == 1 ? d.lines().front() : 0;
}

std::optional<Replacement> merge_ordered(const Gate& g1, const Gate& g2) {
  const int t = g1.target();
  if (int k = extra_line(g1.positive(), g2.positive()); k != 0 && g2.negative() == g1.negative().with(k))
    return Replacement{RuleId::merge_drop, {Gate(g2.positive(), g1.negative(), t)}};
  if (int k = extra_line(g1.positive(), g2.positive()); k != 0 && g1.negative() == g2.negative())
    return Replacement{RuleId::merge_to_negative, {Gate(g2.positive(), g2.negative().with(k), t)}};
  if (int k = extra_line(g1.negative(), g2.negative()); k != 0 && g1.positive() == g2.positive())
    return Replacement{RuleId::merge_to_positive, {Gate(g1.positive().with(k), g2.negative(), t)}};
  return std::nullopt;
}

std::optional<Replacement> reduce_ordered(const Gate& g1, const Gate& g2) {
  const int t = g1.target();
  // p in I1 ∩ J2, q in J1 ∩ I2, and the rest equal.
  const LineSet pq1 = g1.positive() & g2.negative();
  const LineSet qp1 = g1.negative() & g2.positive();
  if (pq1.size() == 1 && qp1.size() == 1) {
    const int p = pq1.lines().front();
    const int q = qp1.lines().front();
    if (g2.positive() == g1.positive().without(p).with(q) && g2.negative() == g1.negative().without(q).with(p)) {
      const LineSet j3 = g1.negative().without(q);
      return Replacement{RuleId::reduce_swap_pair, {Gate(g1.positive(), j3, t), Gate(g2.positive(), j3, t)}};
    }
  }
  if (g1.positive() == g2.positive()) {
    const LineSet only1 = g1.negative() - g2.negative();
    const LineSet only2 = g2.negative() - g1.negative();
    if (only1.size() == 1 && only2.size() == 1) {
      const int p = only1.lines().front();
      const int q = only2.lines().front();
      return Replacement{RuleId::reduce_flip_pair,
                         {Gate(g1.positive().with(p), g1.negative().without(p), t), Gate(g2.positive().with(q), g2.negative().without(q), t)}};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Replacement> try_merge(const Gate& g1, const Gate& g2) {
  if (g1.target() != g2.target()) return std::nullopt;
  if (g1 == g2) return Replacement{RuleId::cancel_identical, {}};
  if (auto r = merge_ordered(g1, g2)) return r;
  return merge_ordered(g2, g1);
}

std::optional<Replacement> reduce_negative(const Gate& g1, const Gate& g2) {
  if (g1.target() != g2.target()) return std::nullopt;
  if (auto r = reduce_ordered(g1, g2)) return r;
  return reduce_ordered(g2, g1);
}

std::optional<Replacement> interchange(const Gate& g1, const Gate& g2) {
  if (independent(g1, g2)) return std::nullopt;
  const int t1 = g1.target();
  const int t2 = g2.target();
  if (!g2.controls().contains(t1) || g1.controls().contains(t2)) return std::nullopt;
  if (g1.positive().subset_of(g2.positive()) && g1.negative().subset_of(g2.negative())) {
    LineSet pos = g2.positive();
    LineSet neg = g2.negative();
    if (pos.contains(t1)) {
      pos.erase(t1);
      neg.insert(t1);
    } else {
      neg.erase(t1);
      pos.insert(t1);
    }
    return Replacement{RuleId::interchange_polarity_flip, {Gate(pos, neg, t2), g1}};
  }
  const LineSet i3 = (g1.positive() | g2.positive()).without(t1);
  const LineSet j3 = (g1.negative() | g2.negative()).without(t1);
  if (!(i3 & j3).empty()) return std::nullopt;
  return Replacement{RuleId::interchange_three_gate, {Gate(i3, j3, t2), g2, g1}};
}

namespace {

std::optional<Replacement> match(const Gate& g1, const Gate& g2, std::span<const RuleId> rules) {
  auto allowed = [&](RuleId r) { return std::find(rules.begin(), rules.end(), r) != rules.end(); };
  if (auto r = try_merge(g1, g2); r && allowed(r->rule)) return r;
  if (auto r = reduce_negative(g1, g2); r && allowed(r->rule)) return r;
  if (auto r = interchange(g1, g2); r && allowed(r->rule)) return r;
  return std::nullopt;
}

using Accept = std::function<bool(const Rewrite&)>;

std::optional<Rewrite> find_rewrite_if(const Circuit& c, std::span<const RuleId> rules, const Accept& accept) {
  const std::size_t l = c.size();
  if (l < 2) return std::nullopt;
  std::vector<std::size_t> next_dep(l, l);
  std::vector<std::ptrdiff_t> prev_dep(l, -1);
  for (std::size_t a = 0; a < l; ++a) {
    for (std::size_t b = a + 1; b < l; ++b) {
      if (!independent(c[a], c[b])) {
        next_dep[a] = b;
        break;
      }
    }
    for (std::size_t b = a; b-- > 0;) {
      if (!independent(c[a], c[b])) {
        prev_dep[a] = static_cast<std::ptrdiff_t>(b);
        break;
      }
    }
  }
  for (std::size_t d = 1; d < l; ++d) {
    for (std::size_t i = 0; i + d < l; ++i) {
      const std::size_t j = i + d;
      const std::size_t lo = std::max<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(i), prev_dep[j]);
      const std::size_t hi = std::min(j - 1, next_dep[i] - 1);
      if (lo > hi) continue;
      auto rep = match(c[i], c[j], rules);
      if (!rep) continue;
      Rewrite r{i, j, lo, rep->rule, std::move(rep->gates)};
      if (!accept || accept(r)) return r;
    }
  }
  return std::nullopt;
}

std::uint64_t fingerprint(const Circuit& c) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (const Gate& g : c.gates()) {
    mix(g.positive().mask());
    mix(g.negative().mask());
    mix(static_cast<std::uint64_t>(g.target()));
  }
  return h;
}

constexpr RuleId reducing[] = {RuleId::cancel_identical, RuleId::merge_drop, RuleId::merge_to_negative, RuleId::merge_to_positive};
constexpr RuleId neutral[] = {RuleId::reduce_swap_pair, RuleId::reduce_flip_pair, RuleId::interchange_polarity_flip};
constexpr RuleId growing[] = {RuleId::interchange_three_gate};

}  // namespace

std::optional<Rewrite> find_rewrite(const Circuit& c, std::span<const RuleId> rules) { return find_rewrite_if(c, rules, {}); }

Circuit apply_rewrite(const Circuit& c, const Rewrite& r) {
  // e_1..e_{i-1}, e_{i+1}..e_s, replacement, e_{s+1}..e_{j-1}, e_{j+1}..
  std::vector<Gate> out;
  out.reserve(c.size() + r.replacement.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k != r.i && k != r.j) out.push_back(c[k]);
    if (k == r.s) out.insert(out.end(), r.replacement.begin(), r.replacement.end());
  }
  Circuit result(c.lines(), std::move(out));
  result.set_layout(c.layout());
  return result;
}

OptimizeResult move_and_replace(const Circuit& c, const OptimizeParams& params) {
  OptimizeResult res{c, 0, false, {}};
  // Depth-first over rewrites: a dead end backs up to the previous circuit
  // and tries its next unseen rewrite.
  std::vector<Circuit> trail{c};
  std::vector<Rewrite> path;
  std::unordered_set<std::uint64_t> seen{fingerprint(c)};
  std::size_t since_best = 0;

  auto unseen = [&](const Rewrite& r) { return !seen.contains(fingerprint(apply_rewrite(trail.back(), r))); };
  auto step = [&](const Rewrite& r) {
    trail.push_back(apply_rewrite(trail.back(), r));
    seen.insert(fingerprint(trail.back()));
    path.push_back(r);
    ++res.rewrites;
    if (trail.back().size() < res.circuit.size()) {
      res.circuit = trail.back();
      res.applied = path;
      since_best = 0;
    } else {
      ++since_best;
    }
  };

  while (!trail.empty()) {
    if (res.rewrites >= params.budget) {
      res.budget_exhausted = true;
      break;
    }
    if (since_best >= params.patience) break;
    const Circuit& cur = trail.back();
    std::optional<Rewrite> r = find_rewrite_if(cur, reducing, unseen);
    if (!r) r = find_rewrite_if(cur, neutral, unseen);
    if (!r && cur.size() + 1 <= res.circuit.size() + params.slack) r = find_rewrite_if(cur, growing, unseen);
    if (r) {
      step(*r);
      continue;
    }
    trail.pop_back();
    if (!path.empty()) path.pop_back();
  }
  return res;
}

}  // namespace revsyn

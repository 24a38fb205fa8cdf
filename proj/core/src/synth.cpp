#include "revsyn/synth.hpp"

#include <bit>

#include "revsyn/group.hpp"
#include "revsyn/rmsynth.hpp"

namespace revsyn {

namespace {

// F ∘ q for an involution F given by independent transpositions.
Permutation left_multiply(const Permutation& q, std::span<const Transposition> f) {
  std::vector<std::uint32_t> t = q.table();
  for (const auto& tr : f) std::swap(t[tr.a], t[tr.b]);
  return Permutation::from_table(std::move(t));
}

// q ∘ F.
Permutation right_multiply(const Permutation& q, std::span<const Transposition> f) {
  std::vector<std::uint32_t> t = q.table();
  std::vector<std::uint32_t> inv(t.size());
  for (std::uint32_t x = 0; x < t.size(); ++x) inv[t[x]] = x;
  for (const auto& tr : f) std::swap(t[inv[tr.a]], t[inv[tr.b]]);
  return Permutation::from_table(std::move(t));
}

std::vector<Transposition> within_cycle_pairs(const Permutation& q) {
  std::vector<Transposition> out;
  for (const Cycle& c : q.cycles())
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) out.emplace_back(c[i], c[j]);
  return out;
}

int group_size(const SynthParams& p, int n) {
  int k = p.k > 0 ? p.k : default_group_size(n);
  return std::clamp(k, 1, std::max(1, n - 1));
}

std::optional<Factor> cube_factor(const Permutation& q, const SynthParams& params) {
  const int n = q.width();
  const auto pool = q.moved_points() <= params.full_pool_limit ? within_cycle_pairs(q) : decompose(q, select_delta(q));
  const std::size_t dist = q.distance();
  std::size_t checked = 0;
  for (auto& hit : hypercube_candidates(n, pool, params.cube_limits)) {
    if (++checked > 16) break;
    if (left_multiply(q, hit.consumed).distance() + hit.consumed.size() != dist) continue;
    return Factor{std::move(hit.consumed), std::move(hit.gates), true};
  }
  return std::nullopt;
}

std::optional<Factor> group_factor(const Permutation& q, int k) {
  const auto factors = decompose(q, select_delta(q));
  const auto grouping = group_transpositions(q.width(), factors, static_cast<std::size_t>(k));
  if (grouping.groups.empty()) return std::nullopt;
  const auto& g = grouping.groups.front();
  return Factor{g.members, realize_group(q.width(), g), false};
}

Permutation side_view(const SynthState& s, Side side) { return side == Side::left ? s.rest : s.rest.inverse(); }

// Synthesis state plus, per side, the remaining minimal factorisation of
// that side's view. Taking a group off a side keeps the rest of its
// factorisation valid; anything else invalidates it.
class Engine {
public:
  Engine(const Permutation& p, const SynthParams& params) : st_(p), params_(params) {}

  [[nodiscard]] const SynthState& state() const noexcept { return st_; }
  SynthState& state() noexcept { return st_; }

  std::optional<Factor> propose(Side side) {
    const Permutation q = side_view(st_, side);
    if (q.is_identity()) return std::nullopt;
    Cache& c = cache(side);
    if (params_.hypercube) {
      std::vector<Transposition> pool;
      if (q.moved_points() <= params_.full_pool_limit) {
        pool = within_cycle_pairs(q);
      } else {
        refresh(c, q);
        pool = c.factors;
      }
      const std::size_t dist = q.distance();
      std::size_t checked = 0;
      for (auto& hit : hypercube_candidates(q.width(), pool, params_.cube_limits)) {
        if (++checked > 16) break;
        if (left_multiply(q, hit.consumed).distance() + hit.consumed.size() != dist) continue;
        return Factor{std::move(hit.consumed), std::move(hit.gates), true};
      }
    }
    const auto k = static_cast<std::size_t>(group_size(params_, q.width()));
    for (int attempt = 0; attempt < 2; ++attempt) {
      refresh(c, q);
      const auto grouping = group_transpositions(q.width(), c.factors, k);
      if (!grouping.groups.empty()) {
        const auto& g = grouping.groups.front();
        // A cache left over from before the other side moved is only a hint.
        if (c.exact || left_multiply(q, g.members).distance() + g.members.size() == q.distance())
          return Factor{g.members, realize_group(q.width(), g), false};
      } else if (c.exact) {
        return std::nullopt;
      }
      c.valid = false;
    }
    return std::nullopt;
  }

  void commit(Side side, const Factor& f) {
    apply_factor(st_, side, f);
    cache(side == Side::left ? Side::right : Side::left).exact = false;
    Cache& c = cache(side);
    if (f.from_cube || !c.valid) {
      c.valid = false;
      return;
    }
    for (const auto& t : f.transpositions) {
      auto it = std::find(c.factors.begin(), c.factors.end(), t);
      if (it == c.factors.end()) {
        c.valid = false;
        return;
      }
      c.factors.erase(it);
    }
  }

private:
  struct Cache {
    bool valid = false;
    bool exact = false;  // factors multiply to this side's current view
    std::vector<Transposition> factors;
  };
  Cache& cache(Side s) { return s == Side::left ? left_ : right_; }
  static void refresh(Cache& c, const Permutation& q) {
    if (c.valid) return;
    c.factors = decompose(q, select_delta(q));
    c.valid = true;
    c.exact = true;
  }

  SynthState st_;
  SynthParams params_;
  Cache left_;
  Cache right_;
};

struct Branch {
  Engine after_first;
  Factor first;
  std::size_t reduction;
  std::size_t gates;
};

// Both-sides lookahead on an engine; nullopt when no side can move.
std::optional<std::pair<Side, Branch>> explore(const Engine& e, std::optional<Transposition> pivot) {
  const std::size_t before = e.state().rest.distance();
  std::optional<std::pair<Side, Branch>> best;
  for (Side side : {Side::left, Side::right}) {
    Engine trial = e;
    std::optional<Factor> first;
    if (pivot) first = Factor{{*pivot}, realize_group(e.state().rest.width(), TranspositionGroup{{*pivot}}), false};
    else first = trial.propose(side);
    if (!first) continue;
    trial.commit(side, *first);
    Engine after_first = trial;
    std::size_t gates = first->gates.size();
    if (auto second = trial.propose(side)) {
      trial.commit(side, *second);
      gates += second->gates.size();
    }
    const std::size_t after = trial.state().rest.distance();
    const std::size_t reduction = before >= after ? before - after : 0;
    if (!best || reduction > best->second.reduction || (reduction == best->second.reduction && gates < best->second.gates))
      best.emplace(side, Branch{std::move(after_first), std::move(*first), reduction, gates});
  }
  return best;
}

void run_loop(Engine& e, const SynthParams& params) {
  while (!e.state().rest.is_identity()) {
    if (params.lr_search) {
      auto choice = explore(e, std::nullopt);
      if (!choice) return;
      e = std::move(choice->second.after_first);
    } else {
      auto f = e.propose(Side::left);
      if (!f) return;
      e.commit(Side::left, *f);
    }
  }
}

}  // namespace

int default_group_size(int n) noexcept { return n < 2 ? 1 : std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(n))) - 1); }

std::optional<Factor> next_factor(const Permutation& q, const SynthParams& params) {
  if (q.is_identity()) return std::nullopt;
  if (params.hypercube)
    if (auto f = cube_factor(q, params)) return f;
  return group_factor(q, group_size(params, q.width()));
}

void apply_factor(SynthState& state, Side side, const Factor& f) {
  if (side == Side::left) {
    state.rest = left_multiply(state.rest, f.transpositions);
    state.left.append(f.gates);
  } else {
    state.rest = right_multiply(state.rest, f.transpositions);
    state.right.prepend(f.gates);
  }
}

std::optional<LrChoice> lr_explore(const SynthState& state, const SynthParams& params, std::optional<Transposition> pivot) {
  Engine e(state.rest, params);
  e.state() = state;
  auto best = explore(e, pivot);
  if (!best) return std::nullopt;
  return LrChoice{best->first, std::move(best->second.first), best->second.reduction, best->second.gates};
}

Permutation add_identity_line(const Permutation& p) {
  std::vector<std::uint32_t> t(p.size() * 2);
  for (std::uint32_t x = 0; x < p.size(); ++x) {
    t[2 * x] = 2 * p(x);
    t[2 * x + 1] = 2 * p(x) + 1;
  }
  return Permutation::from_table(std::move(t));
}

Circuit synthesize(const Permutation& spec, const SynthParams& params) {
  Permutation p = spec;
  if (parity(p) == Parity::odd) {
    if (params.ancilla == AncillaPolicy::reject_odd) throw Error(ErrorCode::odd_permutation_rejected, "odd permutation needs an extra line");
    if (params.ancilla == AncillaPolicy::add_line) p = add_identity_line(p);
  }

  Engine engine(p, params);
  run_loop(engine, params);
  const SynthState& st = engine.state();
  Circuit middle(p.width());
  if (!st.rest.is_identity()) {
    // Groups ran dry: either finish with single transpositions or hand the
    // residual to the Reed-Muller engine, whichever is shorter.
    Circuit rm = rm_synthesize(st.rest);
    SynthParams single = params;
    single.k = 1;
    Engine tail(st.rest, single);
    run_loop(tail, single);
    Circuit alt = tail.state().left;
    if (!tail.state().rest.is_identity()) alt.append(rm_synthesize(tail.state().rest));
    alt.append(tail.state().right);
    middle = alt.size() < rm.size() ? alt : rm;
  }
  Circuit out = st.left;
  out.append(middle);
  out.append(st.right);
  if (params.decompose_wide) out = decompose_to_nct(out);
  return out;
}

}  // namespace revsyn

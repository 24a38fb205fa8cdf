#include "revsyn/rmsynth.hpp"

#include <bit>

namespace revsyn {

WorkTable::WorkTable(const Permutation& p) : n_(p.width()), t_(p.table()), inv_(p.size()) {
  for (std::uint32_t x = 0; x < t_.size(); ++x) inv_[t_[x]] = x;
}

std::uint32_t WorkTable::frontier() const noexcept {
  std::uint32_t i = 0;
  while (i < t_.size() && t_[i] == i) ++i;
  return i;
}

bool WorkTable::fixed_through(std::uint32_t i) const noexcept {
  for (std::uint32_t j = 0; j <= i && j < t_.size(); ++j)
    if (t_[j] != j) return false;
  return true;
}

void WorkTable::apply_output_gate(const Gate& g) {
  const auto m = g.state_masks(n_);
  for (std::uint32_t x = 0; x < t_.size(); ++x) {
    auto& v = t_[x];
    if ((v & m.care) == m.match) {
      v ^= m.flip;
      inv_[v] = x;
    }
  }
}

void WorkTable::swap_values(std::uint32_t a, std::uint32_t b) {
  std::swap(t_[inv_[a]], t_[inv_[b]]);
  std::swap(inv_[a], inv_[b]);
}

void WorkTable::swap_rows(std::uint32_t a, std::uint32_t b) {
  std::swap(t_[a], t_[b]);
  inv_[t_[a]] = a;
  inv_[t_[b]] = b;
}

std::vector<Gate> fix_row(WorkTable& t, std::uint32_t i) {
  const int n = t.width();
  if (i >= t.size()) throw Error(ErrorCode::precondition_violated, "row out of range");
  if (i > 0 && !t.fixed_through(i - 1)) throw Error(ErrorCode::precondition_violated, "earlier rows are not fixed");
  std::vector<Gate> out;
  std::uint32_t v = t[i];
  if (v == i) return out;
  auto emit = [&](const Gate& g) {
    out.push_back(g);
    t.apply_output_gate(g);
    v = t[i];
  };
  for (std::uint32_t set = i & ~v; set != 0; set = i & ~v) {
    const std::uint32_t p = set & (~set + 1);
    emit(Gate(lines_of(v, n), {}, n - std::countr_zero(p)));
  }
  for (std::uint32_t clear = v & ~i; clear != 0; clear = v & ~i) {
    const std::uint32_t q = clear & (~clear + 1);
    emit(Gate(lines_of(v & ~q, n), {}, n - std::countr_zero(q)));
  }
  return out;
}

Circuit rm_synthesize(const Permutation& p, const RowObserver& observer) {
  WorkTable t(p);
  std::vector<Gate> gates;
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    const auto step = fix_row(t, i);
    gates.insert(gates.end(), step.begin(), step.end());
    if (observer) observer(t, i);
  }
  return Circuit(p.width(), std::vector<Gate>(gates.rbegin(), gates.rend()));
}

PushRecord push_row(WorkTable& t, std::uint32_t i, Side side, std::size_t order) {
  const std::uint32_t k = t[i];
  if (k == i) throw Error(ErrorCode::precondition_violated, "row " + std::to_string(i) + " is already fixed");
  if (side == Side::right) {
    t.swap_values(i, k);
    return {Transposition(i, k), side, order};
  }
  const std::uint32_t l = t.preimage(i);
  t.swap_rows(i, l);
  return {Transposition(i, l), side, order};
}

CombineResult combined_synthesize_detailed(const Permutation& p, const CombineParams& params) {
  const int n = p.width();
  if (params.weight_threshold < 0 || params.weight_threshold > n + 1)
    throw Error(ErrorCode::precondition_violated, "weight threshold outside 0..n+1");
  WorkTable t(p);
  CombineResult out{Circuit(n), {}, 0, 0, 0};
  std::vector<Gate> gates;
  std::vector<Transposition> left_pushes;
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    if (t[i] == i) continue;
    if (std::popcount(i) >= params.weight_threshold) {
      const std::size_t order = out.pushes.size();
      Side side = Side::right;
      if (params.policy == PushPolicy::left_only || (params.policy == PushPolicy::alternate && order % 2 == 1)) side = Side::left;
      out.pushes.push_back(push_row(t, i, side, order));
      if (side == Side::left) left_pushes.push_back(out.pushes.back().transposition);
    } else {
      const auto step = fix_row(t, i);
      gates.insert(gates.end(), step.begin(), step.end());
    }
  }
  const Circuit rm(n, std::vector<Gate>(gates.rbegin(), gates.rend()));

  // p = lambda ∘ rm ∘ rho; lambda is the left pushes in order, rho is what remains.
  const Permutation lambda = Permutation::from_transpositions(n, left_pushes);
  const Permutation done = compose(lambda, Permutation::of(rm));
  const Permutation rho = compose(done.inverse(), p);

  SynthParams sp = params.synth;
  sp.ancilla = AncillaPolicy::allow_odd;
  if (!lambda.is_identity()) out.circuit.append(synthesize(lambda, sp));
  out.left_gates = out.circuit.size();
  out.circuit.append(rm);
  out.rm_gates = rm.size();
  if (!rho.is_identity()) {
    const Circuit r = synthesize(rho, sp);
    out.right_gates = r.size();
    out.circuit.append(r);
  }
  return out;
}

Circuit combined_synthesize(const Permutation& p, const CombineParams& params) { return combined_synthesize_detailed(p, params).circuit; }

}  // namespace revsyn

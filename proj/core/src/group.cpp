#include "revsyn/group.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace revsyn {

namespace {

int lowest_line(std::uint32_t state_bits, int n) { return n - (31 - std::countl_zero(state_bits)); }

// Gate with the given controls taking their polarity from `point`.
Gate polarized(LineSet controls, std::uint32_t point, int target, int n) {
  LineSet pos;
  LineSet neg;
  for (int l : controls.lines()) {
    if ((point & state_bit(l, n)) != 0) pos.insert(l);
    else neg.insert(l);
  }
  return Gate(pos, neg, target);
}

// Greedy set of lines on which every point of `avoid` differs from `x`.
LineSet separating_lines(std::uint32_t x, const std::vector<std::uint32_t>& avoid, LineSet excluded, int n) {
  LineSet chosen;
  std::vector<std::uint32_t> open = avoid;
  while (!open.empty()) {
    int best = 0;
    std::size_t best_hits = 0;
    for (int l = 1; l <= n; ++l) {
      if (excluded.contains(l) || chosen.contains(l)) continue;
      const std::uint32_t b = state_bit(l, n);
      const auto hits = static_cast<std::size_t>(std::count_if(open.begin(), open.end(), [&](std::uint32_t z) { return ((z ^ x) & b) != 0; }));
      if (hits > best_hits) {
        best = l;
        best_hits = hits;
      }
    }
    if (best == 0) throw Error(ErrorCode::canonicalization_failed, "no separating control set");
    chosen.insert(best);
    const std::uint32_t b = state_bit(best, n);
    std::erase_if(open, [&](std::uint32_t z) { return ((z ^ x) & b) != 0; });
  }
  return chosen;
}

class Conjugation {
public:
  Conjugation(GroupMatrix m, std::size_t budget) : m_(std::move(m)), conj_(m_.n), budget_(budget) {}

  void emit(const Gate& g) {
    if (conj_.size() >= budget_) throw Error(ErrorCode::canonicalization_failed, "conjugation budget exhausted");
    conj_.push_back(g);
    for (auto& r : m_.rows) r = g.apply(r, m_.n);
  }
  GroupMatrix& matrix() { return m_; }
  Conjugated finish(GroupMatrix::Stage stage) {
    m_.stage = stage;
    return {std::move(m_), std::move(conj_)};
  }

private:
  GroupMatrix m_;
  Circuit conj_;
  std::size_t budget_;
};

void make_pairs_canonical(Conjugation& cj, int t) {
  GroupMatrix& m = cj.matrix();
  const int n = m.n;
  const std::uint32_t tb = state_bit(t, n);
  for (std::size_t k = 0; k < m.pairs(); ++k) {
    std::uint32_t d = m.rows[2 * k] ^ m.rows[2 * k + 1];
    if ((d & tb) == 0) cj.emit(Gate::cnot(lowest_line(d, n), t));
    d = m.rows[2 * k] ^ m.rows[2 * k + 1];
    if (d == tb) continue;
    const int a = lowest_line(d & ~tb, n);
    for (int c : lines_of(d & ~tb & ~state_bit(a, n), n).lines()) cj.emit(Gate::cnot(a, c));

    // Flip a on the second row so it lands next to the first.
    const std::uint32_t y = m.rows[2 * k + 1];
    std::vector<std::uint32_t> avoid;
    for (std::size_t j = 0; j < 2 * k; ++j)
      if (((m.rows[j] ^ y) & tb) == 0) avoid.push_back(m.rows[j]);
    const LineSet s = separating_lines(y, avoid, LineSet{a, t}, n);
    cj.emit(polarized(s.with(t), y, a, n));
  }
}

// Moves the pair addresses (rows with t cleared) onto a subcube of
// dimension log2(K) without touching line t.
void pack_addresses(Conjugation& cj, int t) {
  GroupMatrix& m = cj.matrix();
  const int n = m.n;
  const std::size_t k_pairs = m.pairs();
  if (k_pairs < 2) return;
  const int dim = std::countr_zero(k_pairs);
  const std::uint32_t tb = state_bit(t, n);
  auto address = [&](std::size_t k) { return m.rows[2 * k] & ~tb; };

  std::uint32_t cube_mask = 0;
  for (int step = 0; step < dim; ++step) {
    int best = 0;
    std::size_t best_count = 0;
    for (int l = 1; l <= n; ++l) {
      const std::uint32_t b = state_bit(l, n);
      if (l == t || (cube_mask & b) != 0) continue;
      std::set<std::uint32_t> proj;
      for (std::size_t k = 0; k < k_pairs; ++k) proj.insert(address(k) & (cube_mask | b));
      if (proj.size() > best_count) {
        best = l;
        best_count = proj.size();
      }
    }
    if (best == 0) throw Error(ErrorCode::canonicalization_failed, "not enough coordinates for the address cube");
    cube_mask |= state_bit(best, n);
  }

  const std::uint32_t base = address(0) & ~cube_mask;
  std::set<std::uint32_t> placed;
  for (std::size_t k = 0; k < k_pairs; ++k) {
    std::uint32_t z = address(k);
    std::uint32_t target = 0;
    int target_dist = 64;
    for (std::uint32_t sub = cube_mask;; sub = (sub - 1) & cube_mask) {
      const std::uint32_t v = base | sub;
      const int dist = std::popcount(v ^ z);
      if (!placed.contains(v) && (dist < target_dist || (dist == target_dist && v < target))) {
        target = v;
        target_dist = dist;
      }
      if (sub == 0) break;
    }
    while (z != target) {
      int c = 0;
      for (int l : lines_of(z ^ target, n).lines()) {
        if (!placed.contains(z ^ state_bit(l, n))) {
          c = l;
          break;
        }
      }
      if (c == 0) throw Error(ErrorCode::canonicalization_failed, "address path blocked");
      const std::vector<std::uint32_t> avoid(placed.begin(), placed.end());
      const LineSet s = separating_lines(z, avoid, LineSet{c, t}, n);
      cj.emit(polarized(s, z, c, n));
      z = address(k);
    }
    placed.insert(z);
  }
}

}  // namespace

std::uint64_t GroupMatrix::column(int line) const {
  std::uint64_t out = 0;
  const std::uint32_t b = state_bit(line, n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    if ((rows[r] & b) != 0) out |= std::uint64_t{1} << r;
  return out;
}

GroupMatrix build_matrix(int n, const TranspositionGroup& g) {
  GroupMatrix m;
  m.n = n;
  for (const auto& t : g.members) {
    m.rows.push_back(t.a);
    m.rows.push_back(t.b);
  }
  return m;
}

Conjugated zero_duplicate_columns(const GroupMatrix& m) {
  Conjugation cj(m, static_cast<std::size_t>(m.n) * static_cast<std::size_t>(m.n));
  for (int i = 1; i <= m.n; ++i) {
    const std::uint64_t ci = cj.matrix().column(i);
    if (ci == 0) continue;
    for (int j = i + 1; j <= m.n; ++j)
      if (cj.matrix().column(j) == ci) cj.emit(Gate::cnot(i, j));
  }
  return cj.finish(GroupMatrix::Stage::deduped);
}

Conjugated to_canonical_form(const GroupMatrix& m, int t) {
  if (t < 1 || t > m.n) throw Error(ErrorCode::line_out_of_range, "target column " + std::to_string(t));
  Conjugation cj(m, static_cast<std::size_t>(m.n) * static_cast<std::size_t>(m.n));
  make_pairs_canonical(cj, t);
  pack_addresses(cj, t);
  return cj.finish(GroupMatrix::Stage::canonical);
}

LineSet distinct_columns(const GroupMatrix& m) {
  LineSet out;
  const std::uint64_t all = m.rows.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m.rows.size()) - 1;
  for (int l = 1; l <= m.n; ++l) {
    const std::uint64_t c = m.column(l);
    if (c != 0 && c != all) out.insert(l);
  }
  return out;
}

namespace {

void check_final_shape(const GroupMatrix& m, LineSet distinct, int t) {
  if (!distinct.contains(t)) throw Error(ErrorCode::precondition_violated, "target column is not distinct");
  if ((std::size_t{1} << distinct.size()) != m.rows.size())
    throw Error(ErrorCode::precondition_violated, "rows do not fill a subcube over the distinct columns");
}

}  // namespace

FinalStage realize_final(const GroupMatrix& m, LineSet distinct, int t) {
  check_final_shape(m, distinct, t);
  FinalStage out{Circuit(m.n), Gate::not_gate(t)};
  LineSet controls;
  for (int l = 1; l <= m.n; ++l) {
    if (distinct.contains(l)) continue;
    controls.insert(l);
    if (m.column(l) == 0) out.not_conjugator.push_back(Gate::not_gate(l));
  }
  out.final_gate = Gate(controls, {}, t);
  return out;
}

Gate final_gate_with_polarity(const GroupMatrix& m, LineSet distinct, int t) {
  check_final_shape(m, distinct, t);
  LineSet pos;
  LineSet neg;
  for (int l = 1; l <= m.n; ++l) {
    if (distinct.contains(l)) continue;
    if (m.column(l) == 0) neg.insert(l);
    else pos.insert(l);
  }
  return Gate(pos, neg, t);
}

Circuit realize_group(int n, const TranspositionGroup& g) {
  const std::size_t k = g.members.size();
  Circuit out(n);
  if (k == 0) return out;
  if (!std::has_single_bit(k)) {
    std::size_t at = 0;
    for (std::size_t chunk = std::bit_floor(k); at < k; chunk = std::bit_floor(k - at)) {
      TranspositionGroup part;
      part.members.assign(g.members.begin() + static_cast<std::ptrdiff_t>(at), g.members.begin() + static_cast<std::ptrdiff_t>(at + chunk));
      out.append(realize_group(n, part));
      at += chunk;
    }
    return out;
  }

  const GroupMatrix raw = build_matrix(n, g);
  std::optional<Circuit> best;
  for (int dedup = 0; dedup < 2; ++dedup) {
    Conjugated start{raw, Circuit(n)};
    if (dedup == 1) {
      start = zero_duplicate_columns(raw);
      if (start.conjugator.empty()) continue;
    }
    for (int t : distinct_columns(start.matrix).lines()) {
      try {
        const Conjugated canon = to_canonical_form(start.matrix, t);
        Circuit e = start.conjugator;
        e.append(canon.conjugator);
        const Gate last = final_gate_with_polarity(canon.matrix, distinct_columns(canon.matrix), t);
        if (best && best->size() <= 2 * e.size() + 1) continue;
        Circuit c = e;
        c.push_back(last);
        c.append(e.reversed());
        best = std::move(c);
      } catch (const Error& err) {
        if (err.code() != ErrorCode::canonicalization_failed && err.code() != ErrorCode::precondition_violated) throw;
      }
    }
  }
  if (best) return *best;
  if (k == 1) throw Error(ErrorCode::canonicalization_failed, "single transposition could not be realized");
  TranspositionGroup lo;
  TranspositionGroup hi;
  lo.members.assign(g.members.begin(), g.members.begin() + static_cast<std::ptrdiff_t>(k / 2));
  hi.members.assign(g.members.begin() + static_cast<std::ptrdiff_t>(k / 2), g.members.end());
  out.append(realize_group(n, lo));
  out.append(realize_group(n, hi));
  return out;
}

namespace {

void emit_mct(const std::vector<int>& controls, int target, int n, Circuit& out) {
  const std::size_t m = controls.size();
  if (m <= 2) {
    LineSet cs;
    for (int c : controls) cs.insert(c);
    out.push_back(Gate(cs, {}, target));
    return;
  }
  std::vector<int> spare;
  for (int l = 1; l <= n; ++l)
    if (l != target && std::find(controls.begin(), controls.end(), l) == controls.end()) spare.push_back(l);

  if (spare.size() + 2 >= m) {
    // V-chain with dirty ancillas a_1..a_{m-2}.
    const auto c = [&](std::size_t i) { return controls[i - 1]; };
    const auto a = [&](std::size_t i) { return spare[i - 1]; };
    std::vector<Gate> half;
    half.push_back(Gate::toffoli(c(m), a(m - 2), target));
    for (std::size_t i = m - 1; i >= 3; --i) half.push_back(Gate::toffoli(c(i), a(i - 2), a(i - 1)));
    half.push_back(Gate::toffoli(c(1), c(2), a(1)));
    for (std::size_t i = 3; i <= m - 1; ++i) half.push_back(Gate::toffoli(c(i), a(i - 2), a(i - 1)));
    for (int rep = 0; rep < 2; ++rep)
      for (const Gate& g : half) out.push_back(g);
    return;
  }
  if (spare.empty()) {
    LineSet cs;
    for (int c : controls) cs.insert(c);
    out.push_back(Gate(cs, {}, target));
    return;
  }
  const int b = spare.front();
  const std::size_t m1 = (m + 1) / 2;
  const std::vector<int> c1(controls.begin(), controls.begin() + static_cast<std::ptrdiff_t>(m1));
  std::vector<int> c2(controls.begin() + static_cast<std::ptrdiff_t>(m1), controls.end());
  c2.push_back(b);
  for (int rep = 0; rep < 2; ++rep) {
    emit_mct(c1, b, n, out);
    emit_mct(c2, target, n, out);
  }
}

}  // namespace

Circuit decompose_to_nct(const Circuit& c) {
  Circuit out(c.lines());
  for (const Gate& g : c.gates()) {
    if (g.negative().empty() && g.control_count() <= 2) {
      out.push_back(g);
      continue;
    }
    const auto neg = g.negative().lines();
    for (int j : neg) out.push_back(Gate::not_gate(j));
    emit_mct(g.controls().lines(), g.target(), c.lines(), out);
    for (int j : neg) out.push_back(Gate::not_gate(j));
  }
  out.set_layout(c.layout());
  return out;
}

}  // namespace revsyn

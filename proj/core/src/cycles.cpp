#include "revsyn/cycles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

namespace revsyn {

namespace {

struct LocalPair {
  int u;
  int v;  // u < v, positions within the current piece
};

class Fenwick {
public:
  explicit Fenwick(int n) : tree_(static_cast<std::size_t>(n) + 1, 0) {}
  void add(int i) {
    for (++i; i < static_cast<int>(tree_.size()); i += i & -i) ++tree_[static_cast<std::size_t>(i)];
  }
  [[nodiscard]] int prefix(int i) const {  // sum over [0, i]
    int s = 0;
    for (++i; i > 0; i -= i & -i) s += tree_[static_cast<std::size_t>(i)];
    return s;
  }

private:
  std::vector<int> tree_;
};

Cycle rotate_to_min(Cycle c) {
  auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  return c;
}

// Number of other pairs left with one endpoint on each side when the piece is
// cut at pair i: endpoints inside (u, v] minus twice the pairs nested there.
std::vector<int> broken_counts(int m, const std::vector<LocalPair>& pairs) {
  std::vector<int> prefix(static_cast<std::size_t>(m), 0);
  for (const auto& p : pairs) {
    ++prefix[static_cast<std::size_t>(p.u)];
    ++prefix[static_cast<std::size_t>(p.v)];
  }
  std::partial_sum(prefix.begin(), prefix.end(), prefix.begin());

  // Counting sort by right endpoint.
  std::vector<std::size_t> start(static_cast<std::size_t>(m) + 1, 0);
  for (const auto& p : pairs) ++start[static_cast<std::size_t>(p.v) + 1];
  std::partial_sum(start.begin(), start.end(), start.begin());
  std::vector<std::size_t> by_end(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) by_end[start[static_cast<std::size_t>(pairs[i].v)]++] = i;

  std::vector<int> out(pairs.size());
  Fenwick starts(m);
  int added = 0;
  std::size_t next = 0;
  for (std::size_t qi : by_end) {
    const auto& q = pairs[qi];
    while (next < by_end.size() && pairs[by_end[next]].v <= q.v) {
      starts.add(pairs[by_end[next]].u);
      ++added;
      ++next;
    }
    const int nested = added - starts.prefix(q.u);
    const int endpoints = prefix[static_cast<std::size_t>(q.v)] - prefix[static_cast<std::size_t>(q.u)];
    out[qi] = endpoints - 2 * nested - 1;
  }
  return out;
}

struct Piece {
  Cycle points;
  std::vector<LocalPair> pairs;
};

void disjoint_piece(Piece piece, std::vector<Transposition>& chosen, std::vector<Cycle>& leftovers, DisjointTrace* trace) {
  const int m = static_cast<int>(piece.points.size());
  if (m < 2) return;
  if (piece.pairs.empty()) {
    leftovers.push_back(rotate_to_min(std::move(piece.points)));
    return;
  }
  DisjointTrace::Split record;
  record.pair_scans = 0;  // pairs inherited from the parent, no rescan
  const auto broken = broken_counts(m, piece.pairs);
  record.break_counts = 1;

  std::size_t best = 0;
  auto key = [&](std::size_t i) {
    const auto& p = piece.pairs[i];
    return Transposition(piece.points[static_cast<std::size_t>(p.u)], piece.points[static_cast<std::size_t>(p.v)]);
  };
  for (std::size_t i = 1; i < piece.pairs.size(); ++i) {
    if (broken[i] < broken[best] || (broken[i] == broken[best] && key(i) < key(best))) best = i;
  }
  record.selections = 1;
  if (trace != nullptr) trace->splits.push_back(record);

  const LocalPair cut = piece.pairs[best];
  chosen.push_back(key(best));

  // Left split c = (c_u, c_v) ∘ R: R has the arcs (u, v] and (v, u] in original order.
  auto in_inner = [&](int pos) { return pos > cut.u && pos <= cut.v; };
  Piece inner;
  Piece outer;
  std::vector<int> local(static_cast<std::size_t>(m));
  for (int pos = cut.u + 1; pos <= cut.v; ++pos) {
    local[static_cast<std::size_t>(pos)] = static_cast<int>(inner.points.size());
    inner.points.push_back(piece.points[static_cast<std::size_t>(pos)]);
  }
  for (int k = 1; k <= m - (cut.v - cut.u); ++k) {
    const int pos = (cut.v + k) % m;
    local[static_cast<std::size_t>(pos)] = static_cast<int>(outer.points.size());
    outer.points.push_back(piece.points[static_cast<std::size_t>(pos)]);
  }
  for (std::size_t i = 0; i < piece.pairs.size(); ++i) {
    if (i == best) continue;
    const auto& p = piece.pairs[i];
    const bool a = in_inner(p.u);
    const bool b = in_inner(p.v);
    if (a != b) continue;  // broken by the cut
    int lu = local[static_cast<std::size_t>(p.u)];
    int lv = local[static_cast<std::size_t>(p.v)];
    if (lu > lv) std::swap(lu, lv);
    (a ? inner : outer).pairs.push_back({lu, lv});
  }

  const std::uint32_t inner_min = *std::min_element(inner.points.begin(), inner.points.end());
  const std::uint32_t outer_min = *std::min_element(outer.points.begin(), outer.points.end());
  if (inner_min < outer_min) {
    disjoint_piece(std::move(inner), chosen, leftovers, trace);
    disjoint_piece(std::move(outer), chosen, leftovers, trace);
  } else {
    disjoint_piece(std::move(outer), chosen, leftovers, trace);
    disjoint_piece(std::move(inner), chosen, leftovers, trace);
  }
}

std::pair<std::size_t, std::size_t> positions_of(const Cycle& c, const Transposition& t) {
  auto a = std::find(c.begin(), c.end(), t.a);
  auto b = std::find(c.begin(), c.end(), t.b);
  if (a == c.end() || b == c.end()) throw Error(ErrorCode::elements_not_in_cycle, "transposition points are not both in the cycle");
  return {static_cast<std::size_t>(a - c.begin()), static_cast<std::size_t>(b - c.begin())};
}

// Arc of c from position `from` of length `len`, cyclically.
Cycle arc(const Cycle& c, std::size_t from, std::size_t len) {
  Cycle out;
  for (std::size_t k = 0; k < len; ++k) out.push_back(c[(from + k) % c.size()]);
  return out;
}

void keep_nontrivial(std::vector<Cycle>& out, Cycle c) {
  if (c.size() >= 2) out.push_back(rotate_to_min(std::move(c)));
}

// (c0 c1 ... ) = (c0,c1) ∘ (c2,c3) ∘ ... by successive left splits at consecutive points.
void chain(Cycle c, std::vector<Transposition>& out) {
  while (c.size() >= 2) {
    out.emplace_back(c[0], c[1]);
    if (c.size() == 2) break;
    Cycle rest(c.begin() + 2, c.end());
    rest.push_back(c[0]);
    c = std::move(rest);
  }
}

}  // namespace

DisjointResult effective_disjoint(const Cycle& c, int delta, DisjointTrace* trace) {
  DisjointResult result;
  if (c.size() < 2) throw Error(ErrorCode::precondition_violated, "effective disjoint of a cycle shorter than 2");

  Piece root;
  root.points = c;
  const int m = static_cast<int>(c.size());
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v)
      if (std::popcount(c[static_cast<std::size_t>(u)] ^ c[static_cast<std::size_t>(v)]) == delta) root.pairs.push_back({u, v});
  if (trace != nullptr) trace->initial_pair_scans = 1;

  if (root.pairs.empty()) {
    result.cycles.push_back(c);
    return result;
  }
  std::vector<Transposition> chosen;
  std::vector<Cycle> leftovers;
  disjoint_piece(std::move(root), chosen, leftovers, trace);
  std::sort(leftovers.begin(), leftovers.end(), [](const Cycle& a, const Cycle& b) { return a.front() < b.front(); });
  for (const auto& t : chosen) result.cycles.push_back({t.a, t.b});
  result.chosen = chosen.size();
  result.cycles.insert(result.cycles.end(), leftovers.begin(), leftovers.end());
  result.found = true;
  return result;
}

std::vector<Cycle> SplitResult::factors() const {
  std::vector<Cycle> out;
  if (side == Side::left) out.push_back({t.a, t.b});
  out.insert(out.end(), rest.begin(), rest.end());
  if (side == Side::right) out.push_back({t.a, t.b});
  return out;
}

SplitResult split_left(const Cycle& c, const Transposition& t) {
  auto [u, v] = positions_of(c, t);
  if (u > v) std::swap(u, v);
  SplitResult out{t, {}, Side::left};
  keep_nontrivial(out.rest, arc(c, u + 1, v - u));
  keep_nontrivial(out.rest, arc(c, v + 1, c.size() - (v - u)));
  std::sort(out.rest.begin(), out.rest.end(), [](const Cycle& a, const Cycle& b) { return a.front() < b.front(); });
  return out;
}

SplitResult split_right(const Cycle& c, const Transposition& t) {
  auto [u, v] = positions_of(c, t);
  if (u > v) std::swap(u, v);
  SplitResult out{t, {}, Side::right};
  keep_nontrivial(out.rest, arc(c, u, v - u));
  keep_nontrivial(out.rest, arc(c, v, c.size() - (v - u)));
  std::sort(out.rest.begin(), out.rest.end(), [](const Cycle& a, const Cycle& b) { return a.front() < b.front(); });
  return out;
}

std::map<int, std::size_t> distance_histogram(const Permutation& p) {
  std::map<int, std::size_t> out;
  for (const Cycle& c : p.cycles())
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) ++out[std::popcount(c[i] ^ c[j])];
  return out;
}

std::optional<int> select_delta(const Permutation& p) {
  const auto hist = distance_histogram(p);
  std::optional<int> best;
  std::size_t best_count = 0;
  for (const auto& [delta, count] : hist) {
    if (count > best_count) {
      best = delta;
      best_count = count;
    }
  }
  return best;
}

std::vector<Transposition> decompose(const Permutation& p, std::optional<int> delta) {
  std::vector<Transposition> out;
  for (const Cycle& c : p.cycles()) {
    if (!delta) {
      chain(c, out);
      continue;
    }
    const auto split = effective_disjoint(c, *delta);
    for (std::size_t i = 0; i < split.cycles.size(); ++i) {
      if (i < split.chosen) out.emplace_back(split.cycles[i][0], split.cycles[i][1]);
      else chain(split.cycles[i], out);
    }
  }
  return out;
}

Grouping group_transpositions(int width, std::span<const Transposition> factors, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::precondition_violated, "group size must be at least 1");
  Grouping out{{}, Permutation::identity(width)};
  std::unordered_map<std::uint32_t, bool> blocked;  // points of leftovers
  std::vector<bool> grouped(factors.size(), false);
  std::vector<std::size_t> open;

  auto is_blocked = [&](const Transposition& t) { return blocked.contains(t.a) || blocked.contains(t.b); };
  auto conflicts_open = [&](const Transposition& t) {
    return std::any_of(open.begin(), open.end(), [&](std::size_t i) { return !factors[i].independent_of(t); });
  };

  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Transposition& t = factors[i];
    if (is_blocked(t) || conflicts_open(t)) {
      blocked[t.a] = true;
      blocked[t.b] = true;
      continue;
    }
    open.push_back(i);
    if (open.size() == k) {
      TranspositionGroup g;
      for (std::size_t j : open) {
        g.members.push_back(factors[j]);
        grouped[j] = true;
      }
      out.groups.push_back(std::move(g));
      open.clear();
    }
  }
  // The unfinished group follows every emitted group, so it simply stays among the leftovers.
  std::vector<Transposition> rest;
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (!grouped[i]) rest.push_back(factors[i]);
  out.residual = Permutation::from_transpositions(width, rest);
  return out;
}

Grouping group_transpositions(const Permutation& p, std::size_t k) {
  const auto factors = decompose(p, select_delta(p));
  return group_transpositions(p.width(), factors, k);
}

}  // namespace revsyn

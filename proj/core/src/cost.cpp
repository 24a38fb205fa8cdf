#include "revsyn/cost.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace revsyn {

namespace {

std::uint64_t default_quantum_cost(int c) {
  if (c <= 1) return 1;
  if (c == 2) return 5;
  return (std::uint64_t{1} << (c + 1)) - 3;
}

std::uint64_t default_t_count(int c) {
  if (c <= 1) return 0;
  if (c == 2) return 7;
  return 8 * static_cast<std::uint64_t>(c - 1) - 9;
}

}  // namespace

CostModel CostModel::defaults() { return CostModel(); }

CostModel CostModel::explicit_tables(std::map<int, std::uint64_t> qc, std::map<int, std::uint64_t> t) {
  CostModel m;
  m.qc_ = std::move(qc);
  m.t_ = std::move(t);
  m.fallback_ = false;
  m.check_monotone();
  return m;
}

CostModel CostModel::parse(std::string_view text) {
  CostModel m;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key)) continue;
    auto fail = [&] { throw Error(ErrorCode::invalid_cost_model, "line " + std::to_string(line_no) + ": " + line); };
    if (key == "qc" || key == "t") {
      long long c = -1;
      long long cost = -1;
      if (!(fields >> c >> cost) || c < 0 || cost < 0 || c >= max_lines) fail();
      (key == "qc" ? m.qc_ : m.t_)[static_cast<int>(c)] = static_cast<std::uint64_t>(cost);
    } else if (key == "negative_controls") {
      std::string mode;
      fields >> mode;
      if (mode == "free") m.negative_controls_free_ = true;
      else if (mode == "costed") m.negative_controls_free_ = false;
      else fail();
    } else if (key == "ancilla_threshold") {
      int c = -1;
      if (!(fields >> c) || c < 0) fail();
      m.ancilla_threshold_ = c;
    } else {
      fail();
    }
    std::string extra;
    if (fields >> extra) fail();
  }
  m.check_monotone();
  return m;
}

CostModel CostModel::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::invalid_cost_model, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::uint64_t CostModel::quantum_cost(int controls) const {
  if (auto it = qc_.find(controls); it != qc_.end()) return it->second;
  if (!fallback_) throw Error(ErrorCode::model_incomplete, "no quantum cost for " + std::to_string(controls) + " controls");
  return default_quantum_cost(controls);
}

std::uint64_t CostModel::t_count(int controls) const {
  if (auto it = t_.find(controls); it != t_.end()) return it->second;
  if (!fallback_) throw Error(ErrorCode::model_incomplete, "no T-count for " + std::to_string(controls) + " controls");
  return default_t_count(controls);
}

void CostModel::set_quantum_cost(int controls, std::uint64_t cost) {
  qc_[controls] = cost;
  check_monotone();
}

void CostModel::set_t_count(int controls, std::uint64_t cost) {
  t_[controls] = cost;
  check_monotone();
}

void CostModel::check_monotone() const {
  // Only the explicit entries plus their formula neighbours can break monotonicity.
  auto check = [&](const std::map<int, std::uint64_t>& table, auto lookup, const char* what) {
    if (table.empty()) return;
    const int last = table.rbegin()->first + (fallback_ ? 1 : 0);
    std::uint64_t prev = 0;
    bool have_prev = false;
    for (int c = 0; c <= last; ++c) {
      std::uint64_t v = 0;
      if (auto it = table.find(c); it != table.end()) v = it->second;
      else if (fallback_) v = lookup(c);
      else continue;
      if (have_prev && v < prev)
        throw Error(ErrorCode::invalid_cost_model, std::string(what) + " table decreases at " + std::to_string(c) + " controls");
      prev = v;
      have_prev = true;
    }
  };
  check(qc_, default_quantum_cost, "qc");
  check(t_, default_t_count, "t");
}

std::uint64_t quantum_cost(const Circuit& c, const CostModel& m) {
  std::uint64_t total = 0;
  for (const Gate& g : c.gates()) {
    total += m.quantum_cost(g.control_count());
    if (!m.negative_controls_free()) total += 2 * static_cast<std::uint64_t>(g.negative().size()) * m.quantum_cost(0);
  }
  return total;
}

TCount t_count(const Circuit& c, const CostModel& m) {
  TCount out;
  for (const Gate& g : c.gates()) {
    const int controls = g.control_count();
    out.count += m.t_count(controls);
    if (controls >= m.ancilla_threshold() && c.lines() - (controls + 1) == 0) out.ancilla_required = true;
  }
  return out;
}

}  // namespace revsyn

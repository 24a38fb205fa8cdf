#include "revsyn/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace revsyn {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(std::string_view s, std::string_view seps) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const auto j = s.find_first_of(seps, i);
    const auto tok = trim(s.substr(i, j == std::string_view::npos ? std::string_view::npos : j - i));
    if (!tok.empty()) out.emplace_back(tok);
    if (j == std::string_view::npos) break;
    i = j + 1;
  }
  return out;
}

struct Line {
  int number;
  std::string_view text;
};

// Non-empty lines with comments removed.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t i = 0;
  while (i <= text.size()) {
    const auto j = text.find('\n', i);
    std::string_view line = text.substr(i, j == std::string_view::npos ? std::string_view::npos : j - i);
    ++number;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    line = trim(line);
    if (!line.empty()) out.push_back({number, line});
    if (j == std::string_view::npos) break;
    i = j + 1;
  }
  return out;
}

[[noreturn]] void fail(ErrorCode code, const Line& l, const std::string& what) {
  throw Error(code, "line " + std::to_string(l.number) + ": " + what);
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return out;
}

std::pair<std::string_view, std::string_view> head_rest(std::string_view s) {
  const auto sp = s.find_first_of(" \t");
  if (sp == std::string_view::npos) return {s, {}};
  return {s.substr(0, sp), trim(s.substr(sp + 1))};
}

class Names {
public:
  void declare(const std::vector<std::string>& names, const Line& l) {
    if (names.empty()) fail(ErrorCode::malformed_header, l, "no variables declared");
    for (const auto& n : names) {
      if (index_.contains(n)) fail(ErrorCode::malformed_header, l, "duplicate variable " + n);
      index_[n] = static_cast<int>(list_.size()) + 1;
      list_.push_back(n);
    }
  }
  [[nodiscard]] bool empty() const { return list_.empty(); }
  [[nodiscard]] int count() const { return static_cast<int>(list_.size()); }
  [[nodiscard]] int line(const std::string& name, const Line& l) const {
    auto it = index_.find(name);
    if (it == index_.end()) fail(ErrorCode::unknown_variable, l, "unknown variable '" + name + "'");
    return it->second;
  }
  [[nodiscard]] const std::vector<std::string>& list() const { return list_; }

private:
  std::map<std::string, int> index_;
  std::vector<std::string> list_;
};

std::vector<int> lines_for(const Names& names, const std::vector<std::string>& list, const Line& l) {
  std::vector<int> out;
  for (const auto& n : list) out.push_back(names.line(n, l));
  return out;
}

bool default_names(const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] != "x" + std::to_string(i + 1)) return false;
  return true;
}

void check_gate_kind(std::string_view kind, const Line& l, int operands) {
  if (kind.empty()) fail(ErrorCode::malformed_gate, l, "missing gate");
  const char k = static_cast<char>(std::tolower(static_cast<unsigned char>(kind.front())));
  if (k == 'f' || k == 'p' || k == 'v') fail(ErrorCode::unsupported_gate_kind, l, "gate kind '" + std::string(kind) + "' is not a Toffoli gate");
  if (k != 't') fail(ErrorCode::malformed_gate, l, "unknown gate '" + std::string(kind) + "'");
  const std::string digits(kind.substr(1));
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch) != 0; }))
    fail(ErrorCode::malformed_gate, l, "bad gate size in '" + std::string(kind) + "'");
  if (std::stoi(digits) != operands) fail(ErrorCode::malformed_gate, l, "gate size does not match operand count");
}

Gate make_gate(LineSet pos, LineSet neg, int target, int n, const Line& l) {
  if (auto err = validate_gate(pos, neg, target, n)) fail(*err, l, "invalid gate");
  return Gate(pos, neg, target);
}

LineLayout finish_layout(const Names& names, const std::vector<int>& inputs, const std::vector<int>& outputs,
                         std::vector<bool> constants, bool have_constants) {
  LineLayout layout;
  if (!default_names(names.list())) layout.names = names.list();
  layout.inputs = inputs;
  layout.outputs = outputs;
  if (layout.declared()) {
    const auto non_inputs = static_cast<std::size_t>(names.count()) - inputs.size();
    if (!have_constants) constants.assign(non_inputs, false);
    layout.constants = std::move(constants);
  }
  return layout;
}

std::string join(const std::vector<std::string>& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

std::vector<std::string> all_names(const Circuit& c) {
  std::vector<std::string> out;
  for (int l = 1; l <= c.lines(); ++l) out.push_back(c.line_name(l));
  return out;
}

std::vector<std::string> names_of(const Circuit& c, const std::vector<int>& lines) {
  std::vector<std::string> out;
  for (int l : lines) out.push_back(c.line_name(l));
  return out;
}

}  // namespace

Circuit parse_tfc(std::string_view text) {
  Names names;
  std::vector<int> inputs;
  std::vector<int> outputs;
  std::vector<bool> constants;
  bool have_constants = false;
  std::vector<std::string> pending_inputs;
  std::vector<std::string> pending_outputs;
  std::vector<std::pair<Line, std::string>> body;
  bool in_body = false;
  bool ended = false;
  Line last{0, {}};
  for (const Line& l : content_lines(text)) {
    last = l;
    if (ended) fail(ErrorCode::malformed_header, l, "content after END");
    const auto [head, rest] = head_rest(l.text);
    const std::string h = lower(head);
    if (in_body) {
      if (h == "end") {
        ended = true;
        continue;
      }
      body.emplace_back(l, std::string(l.text));
      continue;
    }
    if (h == ".v") names.declare(split(rest, ","), l);
    else if (h == ".i") pending_inputs = split(rest, ",");
    else if (h == ".o") pending_outputs = split(rest, ",");
    else if (h == ".c") {
      have_constants = true;
      for (const auto& tok : split(rest, ", ")) {
        for (char ch : tok) {
          if (ch != '0' && ch != '1') fail(ErrorCode::malformed_header, l, "constant must be 0 or 1");
          constants.push_back(ch == '1');
        }
      }
    } else if (h == ".ol" || h == ".il") {
      // labels only
    } else if (h == "begin") {
      if (names.empty()) fail(ErrorCode::malformed_header, l, "BEGIN before .v");
      in_body = true;
    } else {
      fail(ErrorCode::malformed_header, l, "unexpected '" + std::string(head) + "'");
    }
  }
  if (!in_body || !ended) fail(ErrorCode::malformed_header, last, "missing BEGIN/END");
  inputs = lines_for(names, pending_inputs, last);
  outputs = lines_for(names, pending_outputs, last);
  if (have_constants && constants.size() != static_cast<std::size_t>(names.count()) - inputs.size())
    fail(ErrorCode::malformed_header, last, ".c must give one value per non-input line");

  Circuit c(names.count());
  for (const auto& [l, txt] : body) {
    const auto [kind, ops] = head_rest(txt);
    const auto operands = split(ops, ",");
    check_gate_kind(kind, l, static_cast<int>(operands.size()));
    LineSet pos;
    LineSet neg;
    for (std::size_t k = 0; k + 1 < operands.size(); ++k) {
      std::string name = operands[k];
      const bool negative = name.back() == '\'';
      if (negative) name.pop_back();
      (negative ? neg : pos).insert(names.line(name, l));
    }
    std::string target = operands.back();
    if (target.back() == '\'') fail(ErrorCode::malformed_gate, l, "target cannot be negated");
    c.push_back(make_gate(pos, neg, names.line(target, l), c.lines(), l));
  }
  c.set_layout(finish_layout(names, inputs, outputs, constants, have_constants));
  return c;
}

std::string emit_tfc(const Circuit& c) {
  std::ostringstream out;
  out << ".v " << join(all_names(c), ",") << "\n";
  const LineLayout& layout = c.layout();
  if (layout.declared()) {
    out << ".i " << join(names_of(c, layout.inputs), ",") << "\n";
    out << ".o " << join(names_of(c, layout.outputs), ",") << "\n";
    if (!layout.constants.empty()) {
      std::vector<std::string> vals;
      for (bool b : layout.constants) vals.emplace_back(b ? "1" : "0");
      out << ".c " << join(vals, ",") << "\n";
    }
  }
  out << "BEGIN\n";
  for (const Gate& g : c.gates()) {
    std::vector<std::string> ops;
    for (int l = 1; l <= c.lines(); ++l) {
      if (g.positive().contains(l)) ops.push_back(c.line_name(l));
      else if (g.negative().contains(l)) ops.push_back(c.line_name(l) + "'");
    }
    ops.push_back(c.line_name(g.target()));
    out << "t" << ops.size() << " " << join(ops, ",") << "\n";
  }
  out << "END\n";
  return out.str();
}

Circuit parse_real(std::string_view text) {
  Names names;
  int numvars = -1;
  std::vector<std::string> pending_inputs;
  std::vector<std::string> pending_outputs;
  std::string constants_text;
  std::vector<std::pair<Line, std::string>> body;
  bool in_body = false;
  bool ended = false;
  Line last{0, {}};
  for (const Line& l : content_lines(text)) {
    last = l;
    if (ended) fail(ErrorCode::malformed_header, l, "content after .end");
    const auto [head, rest] = head_rest(l.text);
    const std::string h = lower(head);
    if (in_body) {
      if (h == ".end") {
        ended = true;
        continue;
      }
      body.emplace_back(l, std::string(l.text));
      continue;
    }
    if (h == ".version" || h == ".garbage" || h == ".model" || h == ".define") continue;
    if (h == ".numvars") {
      try {
        numvars = std::stoi(std::string(rest));
      } catch (const std::exception&) {
        fail(ErrorCode::malformed_header, l, "bad .numvars");
      }
    } else if (h == ".variables") {
      names.declare(split(rest, " \t"), l);
    } else if (h == ".inputs") {
      pending_inputs = split(rest, " \t");
    } else if (h == ".outputs") {
      pending_outputs = split(rest, " \t");
    } else if (h == ".constants") {
      constants_text = std::string(rest);
    } else if (h == ".begin") {
      if (names.empty()) fail(ErrorCode::malformed_header, l, ".begin before .variables");
      in_body = true;
    } else {
      fail(ErrorCode::malformed_header, l, "unexpected '" + std::string(head) + "'");
    }
  }
  if (!in_body || !ended) fail(ErrorCode::malformed_header, last, "missing .begin/.end");
  if (numvars != names.count()) fail(ErrorCode::malformed_header, last, ".numvars does not match .variables");

  const auto inputs = lines_for(names, pending_inputs, last);
  const auto outputs = lines_for(names, pending_outputs, last);
  std::vector<bool> constants;
  const bool have_constants = !constants_text.empty();
  if (have_constants) {
    if (static_cast<int>(constants_text.size()) != numvars) fail(ErrorCode::malformed_header, last, ".constants needs one symbol per line");
    for (int line = 1; line <= numvars; ++line) {
      const char ch = constants_text[static_cast<std::size_t>(line - 1)];
      const bool is_input = std::find(inputs.begin(), inputs.end(), line) != inputs.end();
      if (ch == '-') {
        if (!is_input && !inputs.empty()) fail(ErrorCode::malformed_header, last, "non-input line without a constant");
        continue;
      }
      if (ch != '0' && ch != '1') fail(ErrorCode::malformed_header, last, "bad constant symbol");
      if (is_input) fail(ErrorCode::malformed_header, last, "input line carries a constant");
      constants.push_back(ch == '1');
    }
  }

  Circuit c(names.count());
  for (const auto& [l, txt] : body) {
    const auto [kind, ops] = head_rest(txt);
    const auto operands = split(ops, " \t");
    check_gate_kind(kind, l, static_cast<int>(operands.size()));
    LineSet pos;
    LineSet neg;
    for (std::size_t k = 0; k + 1 < operands.size(); ++k) {
      std::string name = operands[k];
      const bool negative = name.front() == '-';
      if (negative) name.erase(0, 1);
      (negative ? neg : pos).insert(names.line(name, l));
    }
    const std::string& target = operands.back();
    if (target.front() == '-') fail(ErrorCode::malformed_gate, l, "target cannot be negated");
    c.push_back(make_gate(pos, neg, names.line(target, l), c.lines(), l));
  }
  c.set_layout(finish_layout(names, inputs, outputs, constants, have_constants));
  return c;
}

std::string emit_real(const Circuit& c) {
  std::ostringstream out;
  out << ".version 1.0\n";
  out << ".numvars " << c.lines() << "\n";
  out << ".variables " << join(all_names(c), " ") << "\n";
  const LineLayout& layout = c.layout();
  if (layout.declared()) {
    out << ".inputs " << join(names_of(c, layout.inputs), " ") << "\n";
    out << ".outputs " << join(names_of(c, layout.outputs), " ") << "\n";
    std::string consts;
    std::string garbage;
    std::size_t ci = 0;
    for (int l = 1; l <= c.lines(); ++l) {
      if (std::find(layout.inputs.begin(), layout.inputs.end(), l) != layout.inputs.end()) consts += '-';
      else consts += layout.constants.at(ci++) ? '1' : '0';
      garbage += std::find(layout.outputs.begin(), layout.outputs.end(), l) != layout.outputs.end() ? '-' : '1';
    }
    out << ".constants " << consts << "\n";
    out << ".garbage " << garbage << "\n";
  }
  out << ".begin\n";
  for (const Gate& g : c.gates()) {
    std::vector<std::string> ops;
    for (int l = 1; l <= c.lines(); ++l) {
      if (g.positive().contains(l)) ops.push_back(c.line_name(l));
      else if (g.negative().contains(l)) ops.push_back("-" + c.line_name(l));
    }
    ops.push_back(c.line_name(g.target()));
    out << "t" << ops.size() << " " << join(ops, " ") << "\n";
  }
  out << ".end\n";
  return out.str();
}

TruthTable parse_spec(std::string_view text) {
  TruthTable t;
  t.inputs = -1;
  t.outputs = -1;
  std::vector<Line> rows;
  Line last{0, {}};
  for (const Line& l : content_lines(text)) {
    last = l;
    const auto [head, rest] = head_rest(l.text);
    if (head == ".n" || head == ".m") {
      int v = -1;
      try {
        v = std::stoi(std::string(rest));
      } catch (const std::exception&) {
        fail(ErrorCode::malformed_header, l, "bad " + std::string(head));
      }
      if (v < 1 || v > hard_simulation_cap) fail(ErrorCode::malformed_header, l, std::string(head) + " out of range");
      (head == ".n" ? t.inputs : t.outputs) = v;
      continue;
    }
    if (!head.empty() && head.front() == '.') {
      if (head == ".e" || head == ".end") continue;
      fail(ErrorCode::malformed_header, l, "unexpected '" + std::string(head) + "'");
    }
    rows.push_back(l);
  }
  if (t.inputs < 0 || t.outputs < 0) fail(ErrorCode::malformed_header, last, "missing .n or .m");
  if (t.outputs > 32) fail(ErrorCode::malformed_header, last, "too many outputs");
  const std::size_t expected = std::size_t{1} << t.inputs;
  if (rows.size() != expected)
    throw Error(ErrorCode::row_count_mismatch, "expected " + std::to_string(expected) + " rows, found " + std::to_string(rows.size()));
  t.care.resize(expected);
  t.value.resize(expected);
  for (std::size_t x = 0; x < expected; ++x) {
    const Line& l = rows[x];
    std::string_view out = l.text;
    if (const auto [in, rest] = head_rest(l.text); !rest.empty()) {
      if (static_cast<int>(in.size()) != t.inputs) fail(ErrorCode::bad_symbol, l, "input column has the wrong width");
      std::uint32_t v = 0;
      for (char ch : in) {
        if (ch != '0' && ch != '1') fail(ErrorCode::bad_symbol, l, "bad input symbol");
        v = 2 * v + static_cast<std::uint32_t>(ch == '1');
      }
      if (v != x) fail(ErrorCode::row_count_mismatch, l, "rows must be listed in input order");
      out = rest;
    }
    if (static_cast<int>(out.size()) != t.outputs) fail(ErrorCode::bad_symbol, l, "row has the wrong width");
    std::uint32_t care = 0;
    std::uint32_t value = 0;
    for (char ch : out) {
      care <<= 1;
      value <<= 1;
      if (ch == '0') care |= 1;
      else if (ch == '1') {
        care |= 1;
        value |= 1;
      } else if (ch != '-') fail(ErrorCode::bad_symbol, l, std::string("bad symbol '") + ch + "'");
    }
    t.care[x] = care;
    t.value[x] = value;
  }
  return t;
}

std::string emit_spec(const TruthTable& t) {
  std::ostringstream out;
  out << ".n " << t.inputs << "\n.m " << t.outputs << "\n";
  for (std::size_t x = 0; x < t.care.size(); ++x) {
    for (int i = t.inputs - 1; i >= 0; --i) out << ((x >> i) & 1u);
    out << ' ';
    for (int j = t.outputs - 1; j >= 0; --j) {
      if (((t.care[x] >> j) & 1u) == 0) out << '-';
      else out << ((t.value[x] >> j) & 1u);
    }
    out << "\n";
  }
  return out.str();
}

CircuitFormat format_for(const std::filesystem::path& path) {
  return lower(path.extension().string()) == ".real" ? CircuitFormat::real : CircuitFormat::tfc;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::malformed_header, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::malformed_header, "cannot write " + path.string());
  out << text;
}

Circuit read_circuit(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  return format_for(path) == CircuitFormat::real ? parse_real(text) : parse_tfc(text);
}

void write_circuit(const std::filesystem::path& path, const Circuit& c) {
  write_file(path, format_for(path) == CircuitFormat::real ? emit_real(c) : emit_tfc(c));
}

TruthTable read_spec(const std::filesystem::path& path) { return parse_spec(read_file(path)); }

}  // namespace revsyn

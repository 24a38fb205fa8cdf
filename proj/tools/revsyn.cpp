// revsyn command line front end.
// Exit codes: 0 ok, 1 verification failure, 2 usage, 3 input error.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "revsyn/cost.hpp"
#include "revsyn/flow.hpp"
#include "revsyn/group.hpp"
#include "revsyn/io.hpp"

namespace fs = std::filesystem;
using namespace revsyn;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify = 1;
constexpr int exit_usage = 2;
constexpr int exit_input = 3;

struct VerifyFailed {
  std::string what;
};

struct SynthConfig {
  std::string spec;
  std::string out;
  std::string model;
  int lines = 0;
  int k = 0;
  bool hypercube = true;
  bool lr = true;
  bool rm = false;
  bool cycle = false;
  bool hybrid = false;
  int w = 1;
  std::string policy = "right";
  std::string ancilla = "reject";
  std::string embedding = "both";
  bool optimize = false;
  std::size_t budget = OptimizeParams{}.budget;
  bool best = false;
  bool nct = false;
  double ref = 0;  // reference gate count shown by bench, 0 = none
};

void add_synth_options(CLI::App& app, SynthConfig& c, bool with_files) {
  if (with_files) {
    app.add_option("--spec", c.spec, "truth table (.tt)")->required();
    app.add_option("--out", c.out, "circuit to write (.tfc or .real)");
  }
  app.add_option("--lines", c.lines, "circuit lines (default: fewest possible)")->check(CLI::Range(0, hard_simulation_cap));
  app.add_option("--k", c.k, "transpositions per group (0 = floor(log2 n))")->check(CLI::NonNegativeNumber);
  app.add_flag("--hypercube,!--no-hypercube", c.hypercube, "hypercube factor search");
  app.add_flag("--lr,!--no-lr", c.lr, "explore both multiplication sides");
  auto* rm = app.add_flag("--rm", c.rm, "Reed-Muller engine");
  auto* cy = app.add_flag("--cycle", c.cycle, "cycle engine");
  auto* hy = app.add_flag("--hybrid", c.hybrid, "hybrid engine (default)");
  rm->excludes(cy)->excludes(hy);
  cy->excludes(hy);
  app.add_option("--w", c.w, "hybrid weight threshold")->check(CLI::NonNegativeNumber);
  app.add_option("--policy", c.policy, "hybrid push side")->check(CLI::IsMember({"right", "left", "alternate"}));
  app.add_option("--ancilla", c.ancilla, "odd permutations on the cycle engine")->check(CLI::IsMember({"add", "reject"}));
  app.add_option("--embedding", c.embedding, "how non-bijective tables get lines")->check(CLI::IsMember({"both", "nearest", "xor"}));
  app.add_flag("--optimize", c.optimize, "run moving-and-replacing afterwards");
  app.add_option("--budget", c.budget, "optimizer rewrite budget");
  app.add_flag("--best", c.best, "try every engine, threshold and policy");
  app.add_flag("--nct", c.nct, "decompose gates with three or more controls");
  app.add_option("--model", c.model, "cost model file");
  app.add_option("--ref", c.ref, "reference gate count for reports");
}

FlowOptions to_flow(const SynthConfig& c) {
  FlowOptions f;
  f.lines = c.lines;
  f.embedding = c.embedding == "nearest" ? EmbeddingChoice::nearest : c.embedding == "xor" ? EmbeddingChoice::xor_outputs : EmbeddingChoice::both;
  f.method = c.rm ? Method::rm : c.cycle ? Method::cycle : Method::hybrid;
  f.combine.weight_threshold = c.w;
  f.combine.policy = c.policy == "left" ? PushPolicy::left_only : c.policy == "alternate" ? PushPolicy::alternate : PushPolicy::right_only;
  f.combine.synth.k = c.k;
  f.combine.synth.hypercube = c.hypercube;
  f.combine.synth.lr_search = c.lr;
  f.combine.synth.ancilla = c.ancilla == "add" ? AncillaPolicy::add_line : AncillaPolicy::reject_odd;
  f.optimize = c.optimize;
  f.opt.budget = c.budget;
  f.portfolio = c.best;
  f.nct = c.nct;
  return f;
}

CostModel load_model(const std::string& path) {
  if (!path.empty()) return CostModel::load(path);
  if (const char* env = std::getenv("REVSYN_COST_MODEL"); env != nullptr && *env != '\0') return CostModel::load(env);
  return CostModel::defaults();
}

struct Report {
  std::string name;
  int lines = 0;
  std::size_t gc = 0;
  std::uint64_t qc = 0;
  TCount t;
  bool pass = false;
  double ms = 0;
  double ref = 0;
  std::string recipe;
  std::string error;
};

std::string machine_line(const Report& r) {
  std::ostringstream os;
  os << r.name << ' ' << r.lines << ' ' << r.gc << ' ' << r.qc << ' ' << r.t.count << (r.t.ancilla_required ? "*" : "") << ' '
     << (r.pass ? "pass" : "fail") << ' ';
  os.setf(std::ios::fixed);
  os.precision(1);
  os << r.ms;
  return os.str();
}

void print_table(std::ostream& os, const std::vector<Report>& rs) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-12s %5s %6s %8s %8s %5s %9s %7s  %s\n", "name", "lines", "GC", "QC", "T", "ok", "ms", "ref", "config");
  os << buf;
  for (const auto& r : rs) {
    const std::string t = std::to_string(r.t.count) + (r.t.ancilla_required ? "*" : "");
    const std::string ref = r.ref > 0 ? std::to_string(static_cast<long>(r.ref)) : "-";
    std::snprintf(buf, sizeof buf, "%-12s %5d %6zu %8llu %8s %5s %9.1f %7s  %s\n", r.name.c_str(), r.lines, r.gc,
                  static_cast<unsigned long long>(r.qc), t.c_str(), r.pass ? "pass" : "FAIL", r.ms, ref.c_str(),
                  r.error.empty() ? r.recipe.c_str() : r.error.c_str());
    os << buf;
  }
  os << "(* = T-count assumes an ancilla line the circuit does not have)\n";
}

// Synthesizes and verifies; writes `out` only when verification passed.
Report run_synth(const std::string& name, const SynthConfig& c, const CostModel& model) {
  Report r;
  r.name = name;
  r.ref = c.ref;
  const auto t0 = std::chrono::steady_clock::now();
  const TruthTable spec = read_spec(c.spec);
  FlowResult res = run_flow(spec, to_flow(c));
  r.pass = spec.realized_by(res.circuit);
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  r.lines = res.circuit.lines();
  r.gc = gate_complexity(res.circuit);
  r.qc = quantum_cost(res.circuit, model);
  r.t = t_count(res.circuit, model);
  r.recipe = res.recipe;
  if (r.pass && !c.out.empty()) write_circuit(c.out, res.circuit);
  return r;
}

// Two circuits agree on every input; line counts must match.
bool same_function(const Circuit& a, const Circuit& b) {
  return a.lines() == b.lines() && simulate(a, hard_simulation_cap) == simulate(b, hard_simulation_cap);
}

void write_verified(const std::string& out, const Circuit& produced, const Circuit& reference) {
  if (!same_function(produced, reference)) throw VerifyFailed{"output circuit differs from the input"};
  write_circuit(out, produced);
}

struct SuiteEntry {
  std::string name;
  SynthConfig config;
};

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> w;
  for (std::string s; is >> s;) w.push_back(s);
  return w;
}

// suite.txt: `name file.tt [synth flags]`, # comments. Without it every
// *.tt file in the directory runs with default flags.
std::vector<SuiteEntry> load_suite(const fs::path& dir, const SynthConfig& defaults) {
  std::vector<SuiteEntry> entries;
  const fs::path listing = dir / "suite.txt";
  if (fs::exists(listing)) {
    std::istringstream in(read_file(listing));
    for (std::string line; std::getline(in, line);) {
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      auto words = split_words(line);
      if (words.empty()) continue;
      if (words.size() < 2) throw Error(ErrorCode::malformed_header, "suite line needs a name and a file: " + line);
      SuiteEntry e{words[0], defaults};
      e.config.spec = (dir / words[1]).string();
      CLI::App sub;
      add_synth_options(sub, e.config, false);
      std::vector<std::string> rest(words.rbegin(), words.rend() - 2);
      try {
        sub.parse(rest);
      } catch (const CLI::ParseError& pe) {
        throw Error(ErrorCode::malformed_header, "suite entry " + e.name + ": " + pe.what());
      }
      entries.push_back(std::move(e));
    }
    return entries;
  }
  std::vector<fs::path> files;
  for (const auto& de : fs::directory_iterator(dir))
    if (de.path().extension() == ".tt") files.push_back(de.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    SuiteEntry e{f.stem().string(), defaults};
    e.config.spec = f.string();
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"revsyn: reversible circuit synthesis and optimization"};
  app.require_subcommand(1);

  SynthConfig sc;
  auto* synth = app.add_subcommand("synth", "synthesize a circuit from a truth table");
  add_synth_options(*synth, sc, true);
  std::string report_path;
  synth->add_option("--report", report_path, "append the report line to this file");

  std::string opt_in, opt_out;
  std::size_t opt_budget = OptimizeParams{}.budget;
  auto* optimize = app.add_subcommand("optimize", "reduce gate count with moving-and-replacing");
  optimize->add_option("--in", opt_in)->required();
  optimize->add_option("--out", opt_out)->required();
  optimize->add_option("--budget", opt_budget, "rewrite budget");

  std::string ver_circuit, ver_spec;
  auto* verify = app.add_subcommand("verify", "check a circuit against a truth table");
  verify->add_option("--circuit", ver_circuit)->required();
  verify->add_option("--spec", ver_spec)->required();

  std::string conv_in, conv_out;
  auto* convert = app.add_subcommand("convert", "translate between TFC and REAL");
  convert->add_option("--in", conv_in)->required();
  convert->add_option("--out", conv_out)->required();

  std::string cost_in, cost_model;
  auto* cost = app.add_subcommand("cost", "report GC, QC and T-count");
  cost->add_option("--in", cost_in)->required();
  cost->add_option("--model", cost_model, "cost model file (default: $REVSYN_COST_MODEL)");

  std::string suite_dir, bench_report, bench_out;
  unsigned jobs = 0;
  SynthConfig bench_defaults;
  auto* bench = app.add_subcommand("bench", "run a benchmark suite");
  bench->add_option("--suite", suite_dir, "directory with suite.txt or .tt files")->required();
  bench->add_option("--report", bench_report, "machine-readable report file");
  bench->add_option("--out-dir", bench_out, "write each verified circuit here");
  bench->add_option("--jobs", jobs, "concurrent entries (0 = hardware threads)");
  bench->add_option("--model", bench_defaults.model, "cost model file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*synth) {
      const CostModel model = load_model(sc.model);
      Report r = run_synth(fs::path(sc.spec).stem().string(), sc, model);
      const std::string line = machine_line(r);
      std::cout << line << '\n';
      if (!report_path.empty()) std::ofstream(report_path, std::ios::app) << line << '\n';
      if (!r.pass) {
        std::cerr << "revsyn: synthesized circuit failed verification; nothing written\n";
        return exit_verify;
      }
      return exit_ok;
    }
    if (*optimize) {
      const Circuit c = read_circuit(opt_in);
      OptimizeParams p;
      p.budget = opt_budget;
      const OptimizeResult res = move_and_replace(c, p);
      write_verified(opt_out, res.circuit, c);
      std::cout << "gates " << c.size() << " -> " << res.circuit.size() << " (" << res.rewrites << " rewrites"
                << (res.budget_exhausted ? ", budget exhausted" : "") << ")\n";
      return exit_ok;
    }
    if (*verify) {
      const Circuit c = read_circuit(ver_circuit);
      const TruthTable spec = read_spec(ver_spec);
      const bool ok = spec.realized_by(c);
      std::cout << (ok ? "pass" : "fail") << '\n';
      return ok ? exit_ok : exit_verify;
    }
    if (*convert) {
      const Circuit c = read_circuit(conv_in);
      const Circuit back = format_for(conv_out) == CircuitFormat::real ? parse_real(emit_real(c)) : parse_tfc(emit_tfc(c));
      write_verified(conv_out, back, c);
      return exit_ok;
    }
    if (*cost) {
      const Circuit c = read_circuit(cost_in);
      const CostModel model = load_model(cost_model);
      const TCount t = t_count(c, model);
      std::cout << "lines " << c.lines() << "\nGC " << gate_complexity(c) << "\nQC " << quantum_cost(c, model) << "\nT " << t.count
                << (t.ancilla_required ? " (needs an ancilla line)" : "") << '\n';
      return exit_ok;
    }
    if (*bench) {
      const CostModel model = load_model(bench_defaults.model);
      const auto entries = load_suite(suite_dir, bench_defaults);
      if (!bench_out.empty()) fs::create_directories(bench_out);
      const unsigned width = jobs > 0 ? jobs : std::max(1u, std::thread::hardware_concurrency());
      std::vector<Report> reports(entries.size());
      for (std::size_t start = 0; start < entries.size(); start += width) {
        std::vector<std::future<Report>> batch;
        for (std::size_t i = start; i < std::min(entries.size(), start + width); ++i) {
          SynthConfig cfg = entries[i].config;
          if (!bench_out.empty()) cfg.out = (fs::path(bench_out) / (entries[i].name + ".tfc")).string();
          batch.push_back(std::async(std::launch::async, [name = entries[i].name, cfg, &model] {
            try {
              return run_synth(name, cfg, model);
            } catch (const std::exception& e) {
              Report r;
              r.name = name;
              r.error = e.what();
              return r;
            }
          }));
        }
        for (std::size_t i = 0; i < batch.size(); ++i) reports[start + i] = batch[i].get();
      }
      print_table(std::cout, reports);
      if (!bench_report.empty()) {
        std::ostringstream os;
        for (const auto& r : reports) os << machine_line(r) << '\n';
        write_file(bench_report, os.str());
      }
      for (const auto& r : reports)
        if (!r.pass) return r.error.empty() ? exit_verify : exit_input;
      return exit_ok;
    }
  } catch (const VerifyFailed& v) {
    std::cerr << "revsyn: verification failed: " << v.what << '\n';
    return exit_verify;
  } catch (const Error& e) {
    std::cerr << "revsyn: " << e.what() << '\n';
    return exit_input;
  } catch (const std::exception& e) {
    std::cerr << "revsyn: " << e.what() << '\n';
    return exit_input;
  }
  return exit_usage;
}

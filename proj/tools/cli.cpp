#include "cli.hpp"

#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "domset/bounds.hpp"
#include "domset/discharge.hpp"
#include "domset/fuzz.hpp"
#include "domset/generators.hpp"
#include "domset/graph.hpp"
#include "domset/oracle.hpp"
#include "domset/residual.hpp"
#include "domset/rules.hpp"
#include "domset/serialize.hpp"

namespace domset::cli {
namespace {

// Input problems that map to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err, true);
  auto log = std::make_shared<spdlog::logger>("domset", sink);
  log->set_pattern("[%l] %v");
  const char* env = std::getenv("DOMSET_LOG");
  const std::string level = env ? env : "quiet";
  if (level == "debug") {
    log->set_level(spdlog::level::debug);
  } else if (level == "info") {
    log->set_level(spdlog::level::info);
  } else {
    log->set_level(spdlog::level::off);
  }
  return log;
}

Graph load_graph(const std::string& path) {
  if (path == "-") return parse_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return parse_graph(in);
  } catch (const GraphError& e) {
    throw UsageError(path + (e.line() ? ":" + std::to_string(e.line()) : "") + ": " + e.what());
  }
}

VertexSet load_set(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return normalize_set(parse_vertex_set(in), n);
  } catch (const GraphError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

const WeightScheme& scheme_from_flag(const std::string& name) {
  const auto id = parse_scheme(name);
  if (!id) throw UsageError("unknown scheme '" + name + "' (expected d4 or d5)");
  return WeightScheme::by_id(*id);
}

std::string join(const VertexSet& v) {
  std::string s;
  for (Vertex x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

struct SolveOpts {
  std::string scheme;
  std::string initial_set;
  std::string trace_file;
  std::string input;
};

int cmd_solve(const SolveOpts& o, std::ostream& out, std::ostream& err, spdlog::logger& log) {
  const Graph g = load_graph(o.input);
  if (g.vertex_count() == 0) throw UsageError("empty graph");
  const int delta = degree_stats(g).min_degree;
  const WeightScheme* s = nullptr;
  if (!o.scheme.empty()) {
    s = &scheme_from_flag(o.scheme);
    if (delta < s->degree_floor) {
      throw UsageError("scheme " + s->name() + " needs minimum degree >= " +
                       std::to_string(s->degree_floor) + ", graph has " + std::to_string(delta));
    }
  } else if (delta >= 5) {
    s = &WeightScheme::d5();
  } else if (delta == 4) {
    s = &WeightScheme::d4();
  } else {
    throw UsageError("minimum degree " + std::to_string(delta) + " is below 4; no scheme applies");
  }
  log.info("n={} m={} delta={} scheme={}", g.vertex_count(), g.edge_count(), delta, s->name());

  const bool corollary = !o.initial_set.empty();
  SolveResult res;
  try {
    if (corollary) {
      if (s->id != SchemeId::kD5) throw UsageError("--initial-set requires the d5 scheme");
      VertexSet init = load_set(o.initial_set, g.vertex_count());
      try {
        res = extend_independent_set(g, std::move(init));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    } else {
      res = solve(g, *s);
    }
  } catch (const ProofViolation& e) {
    err << e.what() << '\n' << e.dump() << '\n';
    return kViolation;
  }
  for (const auto& step : res.trace) {
    log.debug("step {} {} |A|={} s={}", step.step, to_string(step.move.rule),
              step.move.added.size(), step.move.realized);
  }

  if (o.trace_file.empty()) {
    out << trace_jsonl(res, corollary);
  } else {
    std::ofstream tf(o.trace_file, std::ios::binary);
    if (!tf) throw UsageError("cannot write " + o.trace_file);
    tf << trace_jsonl(res, corollary);
    out << final_line(res, corollary) << '\n';
  }
  if (res.corollary_violation) {
    err << "corollary violation: |D| = " << res.dominating_set.size() << " > " << res.bound
        << " with S = {" << join(res.initial_set) << "}\n"
        << serialize_graph(g);
    return kViolation;
  }
  return kOk;
}

int cmd_oracle(const std::string& input, std::uint64_t node_limit, int max_vertices,
               std::ostream& out, spdlog::logger& log) {
  const Graph g = load_graph(input);
  OracleOptions opts;
  opts.node_limit = node_limit;
  opts.max_vertices = max_vertices;
  OracleResult res;
  try {
    res = minimum_dominating_set(g, opts);
  } catch (const OracleInconclusive& e) {
    throw UsageError(std::string("oracle inconclusive: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  log.info("explored {} nodes", res.nodes_explored);
  out << "{\"gamma\":" << res.gamma << ",\"witness\":[" << join(res.witness)
      << "],\"nodes\":" << res.nodes_explored << "}\n";
  return kOk;
}

struct GenOpts {
  std::string model;
  int n = 0;
  int d = 0;
  std::uint64_t seed = 0;
  std::string name;
  std::string output;
};

int cmd_gen(const GenOpts& o, std::ostream& out) {
  GeneratorSpec spec;
  spec.n = o.n;
  spec.d = o.d;
  spec.seed = o.seed;
  spec.name = o.name;
  if (o.model == "regular") {
    spec.model = GeneratorModel::kRegular;
  } else if (o.model == "mindeg") {
    spec.model = GeneratorModel::kMinDegree;
  } else if (o.model == "named") {
    spec.model = GeneratorModel::kNamed;
    if (o.name.empty()) throw UsageError("--model named needs --name");
  } else {
    throw UsageError("unknown model '" + o.model + "'");
  }
  std::string text;
  try {
    const Graph g = generate(spec);
    if (spec.model == GeneratorModel::kNamed) {
      const VertexSet d0 = fixture_seed_set(o.name);
      if (!d0.empty()) text += "# seed set: " + join(d0) + "\n";
    }
    text += serialize_graph(g);
  } catch (const GraphError& e) {
    throw UsageError(e.what());
  }
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw UsageError("cannot write " + o.output);
    f << text;
  }
  return kOk;
}

int cmd_check(const std::string& input, std::ostream& out) {
  const Graph g = load_graph(input);
  if (g.vertex_count() == 0) throw UsageError("empty graph");
  const DegreeStats ds = degree_stats(g);
  const ClassicalBounds b = classical_bounds(g.vertex_count(), ds.min_degree);

  std::vector<std::pair<std::string, std::string>> rows;
  auto fixed = [](double x) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(4) << x;
    return s.str();
  };
  rows.emplace_back("n", std::to_string(g.vertex_count()));
  rows.emplace_back("m", std::to_string(g.edge_count()));
  rows.emplace_back("min degree", std::to_string(ds.min_degree));
  rows.emplace_back("max degree", std::to_string(ds.max_degree));
  rows.emplace_back("arnautov", to_string(b.arnautov) + " = " + fixed(to_double(b.arnautov)));
  rows.emplace_back("alon", fixed(b.alon));
  rows.emplace_back("theorem bound", b.theorem_bound ? std::to_string(*b.theorem_bound) : "n/a");
  if (ds.min_degree >= 4) {
    const WeightScheme& s = ds.min_degree >= 5 ? WeightScheme::d5() : WeightScheme::d4();
    const SolveResult res = solve(g, s);
    rows.emplace_back("solver |D|",
                      std::to_string(res.dominating_set.size()) + " (" + s.name() + ")");
  } else {
    rows.emplace_back("solver |D|", "n/a");
  }
  if (g.vertex_count() <= 32) {
    try {
      rows.emplace_back("oracle gamma", std::to_string(minimum_dominating_set(g).gamma));
    } catch (const OracleInconclusive&) {
      rows.emplace_back("oracle gamma", "inconclusive");
    }
  } else {
    rows.emplace_back("oracle gamma", "skipped (n > 32)");
  }

  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
  }
  return kOk;
}

int cmd_verify(const std::string& scheme, const std::string& set_file, const std::string& input,
               std::ostream& out) {
  const WeightScheme& s = scheme_from_flag(scheme);
  auto g = std::make_shared<const Graph>(load_graph(input));
  const VertexSet d = load_set(set_file, g->vertex_count());
  const TerminalReport rep = verify_terminal(build_residual(g, d), s);
  out << report_json(rep) << '\n';
  return kOk;
}

struct FuzzOpts {
  std::string scheme;
  int count = 0;
  std::string n_range;
  std::uint64_t seed = 0;
  int jobs = 1;
};

int cmd_fuzz(const FuzzOpts& o, std::ostream& out, std::ostream& err, spdlog::logger& log) {
  const WeightScheme& s = scheme_from_flag(o.scheme);
  int lo = 0;
  int hi = 0;
  char colon = 0;
  std::istringstream rs(o.n_range);
  if (!(rs >> lo >> colon >> hi) || colon != ':' || !rs.eof()) {
    throw UsageError("--n-range must look like A:B");
  }
  if (lo > hi || lo <= s.degree_floor || (lo == hi && (lo * s.degree_floor) % 2 != 0)) {
    throw UsageError("--n-range " + o.n_range + " is infeasible for " + s.name());
  }
  if (o.count < 0 || o.jobs < 1) throw UsageError("--count must be >= 0 and --jobs >= 1");

  log.info("fuzz {} count={} n={}..{} seed={} jobs={}", s.name(), o.count, lo, hi, o.seed,
           o.jobs);
  const FuzzSummary sum = run_fuzz(s, o.count, lo, hi, o.seed, o.jobs);

  std::map<RuleId, long> hits;
  for (std::size_t i = 0; i < sum.outcomes.size(); ++i) {
    const FuzzOutcome& f = sum.outcomes[i];
    for (const auto& [rule, c] : f.rule_counts) hits[rule] += c;
    if (f.ok()) continue;
    err << "instance " << i << " (" << (f.spec.model == GeneratorModel::kRegular ? "regular" : "mindeg")
        << " n=" << f.spec.n << " d=" << f.spec.d << " seed=" << f.spec.seed << "): ";
    if (!f.failure.empty()) {
      err << "proof violation\n" << f.failure << '\n';
    } else {
      err << "dominating=" << f.dominating << " |D|=" << f.dominating_size << " bound=" << f.bound
          << " steps_ok=" << f.steps_ok << " terminal_ok=" << f.terminal_ok << '\n';
    }
  }
  out << "scheme " << s.name() << " count " << o.count << " n " << lo << ":" << hi << " seed "
      << o.seed << '\n';
  out << "pass " << (o.count - sum.failures) << " fail " << sum.failures << '\n';
  out << "rules";
  for (RuleId r : rule_priority()) out << ' ' << to_string(r) << '=' << hits[r];
  out << '\n';
  return sum.failures == 0 ? kOk : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto log = make_logger(err);

  CLI::App app{"Dominating sets in graphs of minimum degree 4 and 5"};
  app.name("domset");
  app.require_subcommand(1);

  SolveOpts solve_o;
  auto* solve_cmd = app.add_subcommand("solve", "Run the move rules and print the trace");
  solve_cmd->add_option("--scheme", solve_o.scheme, "d4 or d5 (default by minimum degree)");
  solve_cmd->add_option("--initial-set", solve_o.initial_set,
                        "Independent set to extend (5-regular graphs)");
  solve_cmd->add_option("--trace", solve_o.trace_file, "Write the JSON Lines trace here");
  solve_cmd->add_option("input", solve_o.input, "Graph file, or - for stdin")->required();

  std::string oracle_in;
  std::uint64_t node_limit = OracleOptions{}.node_limit;
  int max_vertices = OracleOptions{}.max_vertices;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact domination number");
  oracle_cmd->add_option("--node-limit", node_limit, "Search node budget");
  oracle_cmd->add_option("--max-vertices", max_vertices, "Refuse larger graphs (at most 64)");
  oracle_cmd->add_option("input", oracle_in)->required();

  GenOpts gen_o;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph");
  gen_cmd->add_option("--model", gen_o.model, "regular, mindeg or named")->required();
  gen_cmd->add_option("--n", gen_o.n);
  gen_cmd->add_option("--d", gen_o.d);
  gen_cmd->add_option("--seed", gen_o.seed);
  gen_cmd->add_option("--name", gen_o.name, "Fixture name for --model named");
  gen_cmd->add_option("-o", gen_o.output, "Output file (default stdout)");

  std::string check_in;
  auto* check_cmd = app.add_subcommand("check", "Compare bounds on one graph");
  check_cmd->add_option("input", check_in)->required();

  std::string verify_scheme, verify_set, verify_in;
  auto* verify_cmd = app.add_subcommand("verify-claims", "Discharging report for a chosen set");
  verify_cmd->add_option("--scheme", verify_scheme)->required();
  verify_cmd->add_option("--set", verify_set)->required();
  verify_cmd->add_option("input", verify_in)->required();

  FuzzOpts fuzz_o;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Seeded batch of random instances");
  fuzz_cmd->add_option("--scheme", fuzz_o.scheme)->required();
  fuzz_cmd->add_option("--count", fuzz_o.count)->required();
  fuzz_cmd->add_option("--n-range", fuzz_o.n_range, "A:B")->required();
  fuzz_cmd->add_option("--seed", fuzz_o.seed)->required();
  fuzz_cmd->add_option("--jobs", fuzz_o.jobs, "Worker threads");

  std::vector<std::string> argv_store{"domset"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_o, out, err, *log);
    if (*oracle_cmd) return cmd_oracle(oracle_in, node_limit, max_vertices, out, *log);
    if (*gen_cmd) return cmd_gen(gen_o, out);
    if (*check_cmd) return cmd_check(check_in, out);
    if (*verify_cmd) return cmd_verify(verify_scheme, verify_set, verify_in, out);
    if (*fuzz_cmd) return cmd_fuzz(fuzz_o, out, err, *log);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace domset::cli

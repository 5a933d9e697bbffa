#include "domset/fuzz.hpp"

#include <atomic>
#include <random>
#include <thread>

#include "domset/discharge.hpp"
#include "domset/oracle.hpp"
#include "domset/serialize.hpp"

namespace domset {

GeneratorSpec fuzz_instance(const WeightScheme& s, int n_lo, int n_hi, std::uint64_t seed,
                            int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  GeneratorSpec spec;
  spec.model = index % 2 == 0 ? GeneratorModel::kRegular : GeneratorModel::kMinDegree;
  spec.d = s.degree_floor;
  spec.n = std::uniform_int_distribution<int>(n_lo, n_hi)(rng);
  if (spec.model == GeneratorModel::kRegular && (spec.n * spec.d) % 2 != 0) {
    spec.n += spec.n < n_hi ? 1 : -1;
  }
  spec.seed = rng();
  return spec;
}

FuzzOutcome run_fuzz_case(const GeneratorSpec& spec, const WeightScheme& s) {
  FuzzOutcome out;
  out.spec = spec;
  const Graph g = generate(spec);
  out.n = g.vertex_count();
  SolveResult res;
  try {
    res = solve(g, s);
  } catch (const ProofViolation& e) {
    out.failure = e.dump();
    return out;
  }
  out.dominating_size = res.dominating_set.size();
  out.bound = res.bound;
  out.dominating = is_dominating(g, res.dominating_set);
  out.within_bound = static_cast<std::int64_t>(out.dominating_size) <= res.bound;
  out.steps_ok = true;
  out.terminal_ok = true;
  auto shared = std::make_shared<const Graph>(g);
  VertexSet chosen = res.initial_set;
  for (const auto& step : res.trace) {
    ++out.rule_counts[step.move.rule];
    out.steps_ok = out.steps_ok &&
                   step.move.realized >= s.threshold * static_cast<Potential>(step.move.added.size());
    if (step.move.rule == RuleId::kTerminal) {
      ++out.terminal_states;
      const TerminalReport rep = verify_terminal(build_residual(shared, chosen), s);
      out.terminal_ok = out.terminal_ok && rep.pass;
    }
    chosen.insert(chosen.end(), step.move.added.begin(), step.move.added.end());
  }
  out.trace = trace_jsonl(res);
  return out;
}

FuzzSummary run_fuzz(const WeightScheme& s, int count, int n_lo, int n_hi, std::uint64_t seed,
                     int jobs) {
  FuzzSummary summary;
  summary.outcomes.resize(static_cast<std::size_t>(std::max(count, 0)));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      summary.outcomes[static_cast<std::size_t>(i)] =
          run_fuzz_case(fuzz_instance(s, n_lo, n_hi, seed, i), s);
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& o : summary.outcomes) summary.failures += o.ok() ? 0 : 1;
  return summary;
}

}  // namespace domset

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "domset/generators.hpp"
#include "domset/residual.hpp"
#include "domset/rules.hpp"

namespace domset {

// Instance #index of a seeded batch: alternates the regular and min-degree
// models at the scheme's floor with n drawn from [n_lo, n_hi] (bumped to
// make n*d even for the regular model).
GeneratorSpec fuzz_instance(const WeightScheme& s, int n_lo, int n_hi, std::uint64_t seed,
                            int index);

struct FuzzOutcome {
  GeneratorSpec spec;
  int n = 0;
  std::size_t dominating_size = 0;
  std::int64_t bound = 0;
  bool dominating = false;
  bool within_bound = false;
  bool steps_ok = false;     // every move met threshold * |A|
  bool terminal_ok = false;  // every TERMINAL state certified by discharging
  int terminal_states = 0;
  std::map<RuleId, int> rule_counts;
  std::string failure;  // empty on success; a proof-violation dump otherwise
  std::string trace;    // JSON Lines

  bool ok() const {
    return failure.empty() && dominating && within_bound && steps_ok && terminal_ok;
  }
};

// Solves one instance from the empty set and audits the result.
FuzzOutcome run_fuzz_case(const GeneratorSpec& spec, const WeightScheme& s);

struct FuzzSummary {
  std::vector<FuzzOutcome> outcomes;  // in index order
  int failures = 0;
};

// Runs `count` instances, optionally across `jobs` threads; results do not
// depend on the number of jobs.
FuzzSummary run_fuzz(const WeightScheme& s, int count, int n_lo, int n_hi, std::uint64_t seed,
                     int jobs = 1);

}  // namespace domset

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "domset/graph.hpp"
#include "domset/residual.hpp"

namespace domset {

// Move rules in priority order. Each one names a configuration in which a
// single set A is guaranteed to lower the potential by threshold * |A|,
// provided no earlier rule applies.
enum class RuleId {
  kWHigh,     // white with white-degree >= floor
  kBHigh,     // blue with white-degree >= floor + 1
  kWMid,      // white with white-degree floor-1 (then floor-2 for d5)
  kBMid,      // blue with white-degree floor (then floor-1 for d5)
  kPath3,     // white path on >= 3 vertices: take the second vertex
  kCyc0,      // white cycle of length 0 mod 3
  kCyc2,      // white cycle of length 2 mod 3, long enough
  kCyc1,      // white cycle of length 1 mod 3, long enough
  kClaimC,    // B3 blue next to an isolated white
  kClaimD,    // special blue next to two isolated whites
  kClaimE,    // special blue next to a white 4- or 7-cycle
  kClaimF,    // white P2 whose ends have specials with distinct W0 neighbors
  kSharedW0,  // white P2 whose ends have specials, all sharing one W0 neighbor
  kTerminal,  // minimum dominating set of the white subgraph, all at once
};

enum class RuleArity { kSingleVertex, kComponent, kGadget, kSearch, kTerminal };

struct RuleInfo {
  RuleId id;
  const char* name;
  RuleArity arity;
};

const RuleInfo& rule_info(RuleId id);
std::string to_string(RuleId id);
std::optional<RuleId> parse_rule(const std::string& name);
const std::vector<RuleId>& rule_priority();

struct Move {
  RuleId rule = RuleId::kTerminal;
  VertexSet added;  // the set A, sorted
  Potential realized = 0;
  Potential required = 0;
};

// A rule match before scoring.
struct Candidate {
  RuleId rule = RuleId::kTerminal;
  VertexSet added;
};

// Raised when a chosen move scores below threshold * |A|. Carries a JSON
// object with the graph, D, A and the rule for replay.
class ProofViolation : public std::logic_error {
 public:
  ProofViolation(const std::string& what, std::string dump)
      : std::logic_error(what), dump_(std::move(dump)) {}
  const std::string& dump() const noexcept { return dump_; }

 private:
  std::string dump_;
};

// Applies the non-terminal rules in priority order and returns the first
// match (lowest-id witness within a rule). Nothing means the white subgraph
// is terminal-ready.
//
// SHARED_W0 has no fixed set: when two specials on a white P2 share their
// isolated white, the pair {u1, u2} dominates only five vertices and can fall
// short. The rule then takes the best-scoring single vertex, else the best
// pair, among non-red vertices outside D that meets the threshold. An empty
// `added` means no such set exists.
std::optional<Candidate> first_structural_match(const ResidualGraph& r, const WeightScheme& s);

// Union of minimum dominating sets of the white components. Paths on one or
// two vertices and cycles only; throws std::logic_error otherwise.
VertexSet terminal_set(const ResidualGraph& r);

// Minimum dominating set size of a white path/cycle component.
int component_domination_size(const WhiteComponent& c);

// Next move, or nothing once D dominates. Every returned move has been
// re-scored with score_move; a shortfall throws ProofViolation.
std::optional<Move> find_move(const ResidualGraph& r, const WeightScheme& s);

struct TraceStep {
  int step = 0;  // 1-based
  Move move;
  Potential before = 0;
  Potential after = 0;
};

struct SolveResult {
  VertexSet dominating_set;
  VertexSet initial_set;
  std::vector<TraceStep> trace;
  std::int64_t bound = 0;  // floor(white_weight * n / threshold)
  bool corollary_violation = false;
};

// Runs the move loop from D0 until D dominates. Throws SchemeMismatch when
// the minimum degree is below the scheme floor.
SolveResult solve(const Graph& g, const WeightScheme& s, VertexSet initial = {});

// Extends an independent set of a 5-regular graph with the d5 move loop. A
// result larger than floor(n/3) is flagged in `corollary_violation` rather
// than thrown. Throws std::invalid_argument for a non-independent set or a
// graph that is not 5-regular.
SolveResult extend_independent_set(const Graph& g, VertexSet independent);

}  // namespace domset

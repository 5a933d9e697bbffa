#include "domset/rules.hpp"

#include <algorithm>
#include <array>

#include "domset/serialize.hpp"

namespace domset {
namespace {

constexpr std::array<RuleInfo, 14> kRules = {{
    {RuleId::kWHigh, "W_HIGH", RuleArity::kSingleVertex},
    {RuleId::kBHigh, "B_HIGH", RuleArity::kSingleVertex},
    {RuleId::kWMid, "W_MID", RuleArity::kSingleVertex},
    {RuleId::kBMid, "B_MID", RuleArity::kSingleVertex},
    {RuleId::kPath3, "PATH3", RuleArity::kComponent},
    {RuleId::kCyc0, "CYC0", RuleArity::kComponent},
    {RuleId::kCyc2, "CYC2", RuleArity::kComponent},
    {RuleId::kCyc1, "CYC1", RuleArity::kComponent},
    {RuleId::kClaimC, "CLAIM_C", RuleArity::kSingleVertex},
    {RuleId::kClaimD, "CLAIM_D", RuleArity::kSingleVertex},
    {RuleId::kClaimE, "CLAIM_E", RuleArity::kGadget},
    {RuleId::kClaimF, "CLAIM_F", RuleArity::kGadget},
    {RuleId::kSharedW0, "SHARED_W0", RuleArity::kSearch},
    {RuleId::kTerminal, "TERMINAL", RuleArity::kTerminal},
}};

// Shortest white cycle lengths that the cycle rules take, per residue.
int min_cycle2_length(const WeightScheme& s) { return s.id == SchemeId::kD5 ? 8 : 5; }
int min_cycle1_length(const WeightScheme& s) { return s.id == SchemeId::kD5 ? 13 : 10; }

// {v3, v6, ..., v_{3k}} plus the last vertex when the length is not a
// multiple of three (1-based positions along the sequence).
VertexSet cycle_cover(const VertexSet& seq) {
  const std::size_t len = seq.size();
  VertexSet out;
  for (std::size_t i = 2; i < len - len % 3; i += 3) out.push_back(seq[i]);
  if (len % 3 != 0) out.push_back(seq.back());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Vertex> first_with(const ResidualGraph& r, Color color, int lo, int hi) {
  for (Vertex v = 0; v < r.vertex_count(); ++v) {
    if (r.color(v) != color) continue;
    int d = r.white_degree(v);
    if (d >= lo && d <= hi) return v;
  }
  return std::nullopt;
}

std::optional<Candidate> degree_rules(const ResidualGraph& r, const WeightScheme& s) {
  const int floor = s.degree_floor;
  constexpr int kAny = 1 << 30;
  auto single = [](RuleId id, std::optional<Vertex> v) -> std::optional<Candidate> {
    if (!v) return std::nullopt;
    return Candidate{id, {*v}};
  };
  // Whites above the floor go before whites at the floor: the bound for the
  // latter assumes every white neighbor has white-degree at most the floor.
  if (auto c = single(RuleId::kWHigh, first_with(r, Color::kWhite, floor + 1, kAny))) return c;
  if (auto c = single(RuleId::kWHigh, first_with(r, Color::kWhite, floor, floor))) return c;
  if (auto c = single(RuleId::kBHigh, first_with(r, Color::kBlue, floor + 1, kAny))) return c;
  for (int k = floor - 1; k >= 3; --k) {
    if (auto c = single(RuleId::kWMid, first_with(r, Color::kWhite, k, k))) return c;
    if (auto c = single(RuleId::kBMid, first_with(r, Color::kBlue, k + 1, k + 1))) return c;
  }
  return std::nullopt;
}

std::optional<Candidate> component_rules(const WhiteComponentReport& rep, const WeightScheme& s) {
  for (const auto& c : rep.components) {
    if (c.kind == ComponentKind::kPath && c.size() >= 3) {
      return Candidate{RuleId::kPath3, {c.vertices[1]}};
    }
  }
  struct CycleRule {
    RuleId id;
    int residue;
    int min_length;
  };
  const CycleRule cycle_rules[] = {{RuleId::kCyc0, 0, 3},
                                   {RuleId::kCyc2, 2, min_cycle2_length(s)},
                                   {RuleId::kCyc1, 1, min_cycle1_length(s)}};
  for (const auto& rule : cycle_rules) {
    for (const auto& c : rep.components) {
      if (c.kind == ComponentKind::kCycle && c.size() % 3 == rule.residue &&
          c.size() >= rule.min_length) {
        return Candidate{rule.id, cycle_cover(c.vertices)};
      }
    }
  }
  return std::nullopt;
}

bool is_w0(const ResidualGraph& r, Vertex v) { return r.is_white(v) && r.white_degree(v) == 0; }

int w0_neighbors(const ResidualGraph& r, Vertex v) {
  int k = 0;
  for (Vertex u : r.base().neighbors(v)) k += is_w0(r, u) ? 1 : 0;
  return k;
}

// Best single vertex, else best pair, scoring at least threshold per vertex.
VertexSet certified_search(const ResidualGraph& r, const WeightScheme& s) {
  VertexSet pool;
  for (Vertex v = 0; v < r.vertex_count(); ++v)
    if (!r.is_red(v)) pool.push_back(v);  // red vertices outside D score 0

  const Potential base = potential(r, s);
  Potential best = -1;
  VertexSet best_set;
  for (Vertex v : pool) {
    const VertexSet a{v};
    const Potential gain = base - potential(extend(r, a), s);
    if (gain >= s.threshold && gain > best) {
      best = gain;
      best_set = a;
    }
  }
  if (!best_set.empty()) return best_set;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      const VertexSet a{pool[i], pool[j]};
      const Potential gain = base - potential(extend(r, a), s);
      if (gain >= 2 * s.threshold && gain > best) {
        best = gain;
        best_set = a;
      }
    }
  }
  return best_set;
}

std::optional<Candidate> special_rules(const ResidualGraph& r, const WeightScheme& s,
                                       const WhiteComponentReport& rep) {
  const BlueProfile prof = blue_profile(r, s);

  for (Vertex v : prof.class_members[3]) {
    if (w0_neighbors(r, v) > 0) return Candidate{RuleId::kClaimC, {v}};
  }
  for (Vertex v : prof.special) {
    if (w0_neighbors(r, v) >= 2) return Candidate{RuleId::kClaimD, {v}};
  }
  for (Vertex v : prof.special) {
    Vertex u1 = -1;
    for (Vertex u : r.base().neighbors(v)) {
      if (r.is_white(u) && r.white_degree(u) > 0) u1 = u;
    }
    if (u1 < 0) continue;
    const auto& comp = rep.components[static_cast<std::size_t>(rep.component_of[u1])];
    if (comp.kind != ComponentKind::kCycle || (comp.size() != 4 && comp.size() != 7)) continue;
    // Re-index the cycle from u1, heading to its smaller-id white neighbor.
    const auto& seq = comp.vertices;
    const std::size_t len = seq.size();
    const std::size_t at = static_cast<std::size_t>(std::find(seq.begin(), seq.end(), u1) - seq.begin());
    Vertex fwd = seq[(at + 1) % len], back = seq[(at + len - 1) % len];
    const bool forward = fwd < back;
    auto pos = [&](std::size_t k) {  // k-th vertex along the walk, 1-based
      return forward ? seq[(at + k - 1) % len] : seq[(at + len - (k - 1)) % len];
    };
    VertexSet a{v, pos(3)};
    if (len == 7) a.push_back(pos(6));
    std::sort(a.begin(), a.end());
    return Candidate{RuleId::kClaimE, a};
  }
  // W0 neighbor of a special vertex (the lowest one if there were several).
  auto w0_of = [&](Vertex u) -> Vertex {
    for (Vertex w : r.base().neighbors(u))
      if (is_w0(r, w)) return w;
    return -1;
  };
  auto specials_next_to = [&](Vertex w) {
    VertexSet out;
    for (Vertex u : r.base().neighbors(w))
      if (prof.is_special[u]) out.push_back(u);
    return out;
  };
  bool shared = false;
  for (const auto& c : rep.components) {
    if (c.kind != ComponentKind::kPath || c.size() != 2) continue;
    const VertexSet s1 = specials_next_to(c.vertices[0]);
    const VertexSet s2 = specials_next_to(c.vertices[1]);
    for (Vertex u1 : s1) {
      for (Vertex u2 : s2) {
        if (w0_of(u1) != w0_of(u2)) {
          return Candidate{RuleId::kClaimF, {std::min(u1, u2), std::max(u1, u2)}};
        }
      }
    }
    shared = shared || (!s1.empty() && !s2.empty());
  }
  if (shared) return Candidate{RuleId::kSharedW0, certified_search(r, s)};
  return std::nullopt;
}

}  // namespace

const RuleInfo& rule_info(RuleId id) { return kRules[static_cast<std::size_t>(id)]; }

std::string to_string(RuleId id) { return rule_info(id).name; }

std::optional<RuleId> parse_rule(const std::string& name) {
  for (const auto& r : kRules)
    if (name == r.name) return r.id;
  return std::nullopt;
}

const std::vector<RuleId>& rule_priority() {
  static const std::vector<RuleId> order = [] {
    std::vector<RuleId> v;
    for (const auto& r : kRules) v.push_back(r.id);
    return v;
  }();
  return order;
}

int component_domination_size(const WhiteComponent& c) {
  if (c.kind == ComponentKind::kPath && c.size() <= 2) return 1;
  if (c.kind == ComponentKind::kCycle) return (c.size() + 2) / 3;
  throw std::logic_error("component_domination_size: unsupported component");
}

VertexSet terminal_set(const ResidualGraph& r) {
  const WhiteComponentReport rep = white_components(r);
  VertexSet out;
  for (const auto& c : rep.components) {
    if (c.kind == ComponentKind::kPath && c.size() <= 2) {
      out.push_back(c.vertices.front());
    } else if (c.kind == ComponentKind::kCycle) {
      for (Vertex v : cycle_cover(c.vertices)) out.push_back(v);
    } else {
      throw std::logic_error("terminal_set: white component of kind " + to_string(c.kind) +
                             " with " + std::to_string(c.size()) + " vertices");
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Candidate> first_structural_match(const ResidualGraph& r, const WeightScheme& s) {
  if (auto c = degree_rules(r, s)) return c;
  const WhiteComponentReport rep = white_components(r);
  if (auto c = component_rules(rep, s)) return c;
  return special_rules(r, s, rep);
}

std::optional<Move> find_move(const ResidualGraph& r, const WeightScheme& s) {
  const Potential before = potential(r, s);
  if (before == 0) return std::nullopt;

  Candidate cand;
  if (auto c = first_structural_match(r, s)) {
    cand = std::move(*c);
  } else {
    cand = Candidate{RuleId::kTerminal, terminal_set(r)};
  }

  if (cand.added.empty()) {
    Move none{cand.rule, {}, 0, 0};
    throw ProofViolation("proof violation: rule " + to_string(cand.rule) +
                             " found no set meeting the threshold",
                         violation_dump(r, s, none));
  }

  Move move;
  move.rule = cand.rule;
  move.added = std::move(cand.added);
  move.required = s.threshold * static_cast<Potential>(move.added.size());
  move.realized = score_move(r, move.added, s);
  if (move.realized < move.required ||
      (move.rule == RuleId::kTerminal && move.realized != before)) {
    throw ProofViolation("proof violation: rule " + to_string(move.rule) + " scored " +
                             std::to_string(move.realized) + ", required " +
                             std::to_string(move.required),
                         violation_dump(r, s, move));
  }
  return move;
}

SolveResult solve(const Graph& g, const WeightScheme& s, VertexSet initial) {
  auto shared = std::make_shared<const Graph>(g);
  SolveResult result;
  ResidualGraph r = build_residual(shared, std::move(initial));
  result.initial_set = r.chosen();
  result.bound = s.bound(g.vertex_count());
  Potential current = potential(r, s);
  int step = 0;
  while (auto move = find_move(r, s)) {
    r = extend(r, move->added);
    const Potential next = potential(r, s);
    result.trace.push_back({++step, *move, current, next});
    current = next;
  }
  result.dominating_set = r.chosen();
  return result;
}

SolveResult extend_independent_set(const Graph& g, VertexSet independent) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 5) throw std::invalid_argument("graph is not 5-regular");
  }
  independent = normalize_set(std::move(independent), g.vertex_count());
  if (!is_independent(g, independent)) {
    throw std::invalid_argument("initial set is not independent");
  }
  SolveResult result = solve(g, WeightScheme::d5(), std::move(independent));
  result.corollary_violation =
      static_cast<std::int64_t>(result.dominating_set.size()) > g.vertex_count() / 3;
  return result;
}

}  // namespace domset

#include "domset/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace domset {
namespace {

constexpr int kMaxPairingAttempts = 1'000'000;

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph::from_edges(a + b, edges);
}

// Clique {0 (= x), 1..k} plus a pendant-like vertex k+1 adjacent to 1..k.
Graph pendant_clique(int k) {
  std::vector<Edge> edges;
  for (int u = 0; u <= k; ++u)
    for (int v = u + 1; v <= k; ++v) edges.emplace_back(u, v);
  for (int b = 1; b <= k; ++b) edges.emplace_back(b, k + 1);
  return Graph::from_edges(k + 2, edges);
}

// Apex 0, upper ring 1..5, lower ring 6..10, apex 11.
Graph icosahedron() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    int up = 1 + i, up_next = 1 + (i + 1) % 5;
    int lo = 6 + i, lo_next = 6 + (i + 1) % 5;
    edges.emplace_back(0, up);
    edges.emplace_back(up, up_next);
    edges.emplace_back(lo, lo_next);
    edges.emplace_back(up, lo);
    edges.emplace_back(up_next, lo);
    edges.emplace_back(lo, 11);
  }
  return Graph::from_edges(12, edges);
}

// Cycle 0..8 plus the chords joining vertices at distance two.
Graph circulant_9() {
  std::vector<Edge> edges;
  for (int i = 0; i < 9; ++i) {
    edges.emplace_back(i, (i + 1) % 9);
    edges.emplace_back(i, (i + 2) % 9);
  }
  return Graph::from_edges(9, edges);
}

std::vector<Edge> cycle_edges(int first, int length) {
  std::vector<Edge> edges;
  for (int i = 0; i < length; ++i) edges.emplace_back(first + i, first + (i + 1) % length);
  return edges;
}

// Claim gadgets. White index 0 is always a W0 vertex unless noted.
ResidualTemplate gadget_template(const std::string& kind, int floor) {
  ResidualTemplate t;
  t.degree_floor = floor;
  if (kind == "c") {
    // One B3 blue seeing three isolated whites.
    t.white_count = 3;
    t.blues = {{0, 1, 2}};
  } else if (kind == "d") {
    // A special B2 blue seeing two isolated whites.
    t.white_count = 2;
    t.blues = {{0, 1}};
  } else if (kind == "e4" || kind == "e7") {
    // Special blue joining the isolated white 0 to white 1 on a 4- or 7-cycle.
    int len = kind == "e4" ? 4 : 7;
    t.white_count = 1 + len;
    t.white_edges = cycle_edges(1, len);
    t.blues = {{0, 1}};
  } else if (kind == "f") {
    // P2 on whites 0-1, each endpoint with its own special blue.
    t.white_count = 4;
    t.white_edges = {{0, 1}};
    t.blues = {{0, 2}, {1, 3}};
  }
  return t;
}

struct GadgetEntry {
  const char* name;
  const char* kind;
  int floor;
};

constexpr GadgetEntry kGadgets[] = {
    {"gadget_c", "c", 5},   {"gadget_d", "d", 5},   {"gadget_e4", "e4", 5},
    {"gadget_e7", "e7", 5}, {"gadget_f", "f", 5},   {"gadget_i", "c", 4},
    {"gadget_j", "d", 4},   {"gadget_k4", "e4", 4}, {"gadget_k7", "e7", 4},
    {"gadget_l", "f", 4},
};

const GadgetEntry* find_gadget(const std::string& name) {
  for (const auto& g : kGadgets)
    if (name == g.name) return &g;
  return nullptr;
}

Graph named_fixture(const std::string& name) {
  if (name == "k6") return complete_graph(6);
  if (name == "k55") return complete_bipartite(5, 5);
  if (name == "pendant_k6") return pendant_clique(5);
  if (name == "pendant_k5") return pendant_clique(4);
  if (name == "icosahedron") return icosahedron();
  if (name == "circulant_9_12") return circulant_9();
  if (const auto* g = find_gadget(name)) {
    return realize_template(gadget_template(g->kind, g->floor)).graph;
  }
  throw GraphError("unknown fixture '" + name + "'");
}

Graph random_regular(int n, int d, std::mt19937_64& rng) {
  std::vector<Vertex> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * d);
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < d; ++k) stubs.push_back(v);

  std::vector<Edge> edges(stubs.size() / 2);
  std::set<Edge> seen;
  for (int attempt = 0; attempt < kMaxPairingAttempts; ++attempt) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    seen.clear();
    bool simple = true;
    for (std::size_t i = 0; i < edges.size() && simple; ++i) {
      Vertex u = std::min(stubs[2 * i], stubs[2 * i + 1]);
      Vertex v = std::max(stubs[2 * i], stubs[2 * i + 1]);
      edges[i] = {u, v};
      simple = u != v && seen.insert(edges[i]).second;
    }
    if (simple) return Graph::from_edges(n, edges);
  }
  throw GraphError("configuration model found no simple pairing for n=" +
                   std::to_string(n) + " d=" + std::to_string(d));
}

Graph random_min_degree(int n, int d, std::mt19937_64& rng) {
  std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n));
  std::vector<Vertex> deficient(static_cast<std::size_t>(n));
  std::iota(deficient.begin(), deficient.end(), 0);
  std::uniform_int_distribution<Vertex> any_vertex(0, n - 1);
  while (!deficient.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, deficient.size() - 1);
    Vertex v = deficient[pick(rng)];
    Vertex u;
    do {
      u = any_vertex(rng);
    } while (u == v || adj[v].contains(u));
    adj[v].insert(u);
    adj[u].insert(v);
    std::erase_if(deficient, [&](Vertex w) { return static_cast<int>(adj[w].size()) >= d; });
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : adj[v])
      if (v < u) edges.emplace_back(v, u);
  return Graph::from_edges(n, edges);
}

}  // namespace

Graph generate(const GeneratorSpec& spec) {
  switch (spec.model) {
    case GeneratorModel::kNamed:
      return named_fixture(spec.name);
    case GeneratorModel::kRegular: {
      if (spec.n < 1 || spec.d < 0) throw GraphError("regular model needs n >= 1, d >= 0");
      if (spec.d >= spec.n) {
        throw GraphError("regular model infeasible: d=" + std::to_string(spec.d) +
                         " must be smaller than n=" + std::to_string(spec.n));
      }
      if ((static_cast<std::int64_t>(spec.n) * spec.d) % 2 != 0) {
        throw GraphError("regular model infeasible: n*d=" +
                         std::to_string(static_cast<std::int64_t>(spec.n) * spec.d) +
                         " is odd");
      }
      std::mt19937_64 rng(spec.seed);
      return random_regular(spec.n, spec.d, rng);
    }
    case GeneratorModel::kMinDegree: {
      if (spec.n < 1 || spec.d < 0) throw GraphError("min-degree model needs n >= 1, d >= 0");
      if (spec.d >= spec.n) {
        throw GraphError("min-degree model infeasible: d=" + std::to_string(spec.d) +
                         " must be smaller than n=" + std::to_string(spec.n));
      }
      std::mt19937_64 rng(spec.seed);
      return random_min_degree(spec.n, spec.d, rng);
    }
  }
  throw GraphError("unknown generator model");
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names = {"k6",         "k55",         "pendant_k6",
                                    "pendant_k5", "icosahedron", "circulant_9_12"};
  for (const auto& g : kGadgets) names.emplace_back(g.name);
  return names;
}

VertexSet fixture_seed_set(const std::string& name) {
  if (name == "k6" || name == "k55" || name == "icosahedron") return {};
  if (name == "pendant_k6" || name == "pendant_k5" || name == "circulant_9_12") return {0};
  if (find_gadget(name)) return {0};
  throw GraphError("unknown fixture '" + name + "'");
}

VertexSet random_maximal_independent_set(const Graph& g, std::uint64_t seed) {
  std::vector<Vertex> order(static_cast<std::size_t>(g.vertex_count()));
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<char> blocked(order.size(), 0);
  VertexSet out;
  for (Vertex v : order) {
    if (blocked[v]) continue;
    out.push_back(v);
    blocked[v] = 1;
    for (Vertex u : g.neighbors(v)) blocked[u] = 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

RealizedTemplate realize_template(const ResidualTemplate& tmpl) {
  const int whites = tmpl.white_count;
  const int floor = tmpl.degree_floor;
  auto white_id = [](int i) { return static_cast<Vertex>(1 + i); };

  std::vector<int> white_deg(static_cast<std::size_t>(whites), 0);
  std::vector<int> blue_deg(static_cast<std::size_t>(whites), 0);
  for (auto [a, b] : tmpl.white_edges) {
    ++white_deg[a];
    ++white_deg[b];
  }
  for (const auto& nbrs : tmpl.blues)
    for (int w : nbrs) ++blue_deg[w];

  // Each blue is given as its list of white indices; fillers see one white.
  std::vector<std::vector<int>> blues = tmpl.blues;
  for (int w = 0; w < whites; ++w) {
    for (int k = white_deg[w] + blue_deg[w]; k < floor; ++k) blues.push_back({w});
  }
  while (static_cast<int>(blues.size()) < floor && whites > 0) blues.push_back({0});

  const Vertex first_blue = static_cast<Vertex>(1 + whites);
  const int n = 1 + whites + static_cast<int>(blues.size());
  std::vector<Edge> edges;
  for (auto [a, b] : tmpl.white_edges) edges.emplace_back(white_id(a), white_id(b));
  for (std::size_t i = 0; i < blues.size(); ++i) {
    Vertex b = first_blue + static_cast<Vertex>(i);
    edges.emplace_back(0, b);
    for (int w : blues[i]) edges.emplace_back(white_id(w), b);
    for (std::size_t j = i + 1; j < blues.size(); ++j) {
      edges.emplace_back(b, first_blue + static_cast<Vertex>(j));
    }
  }
  return {Graph::from_edges(n, edges), {0}, 1, first_blue};
}

}  // namespace domset

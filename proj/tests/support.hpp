#pragma once

// Slow, definitional reference computations used to derive expected values.
// Nothing here calls into the library beyond the Graph accessors.

#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "domset/graph.hpp"

namespace domset::testing {

enum class RefColor { kWhite, kBlue, kRed };

struct RefState {
  std::vector<RefColor> color;
  std::vector<int> white_degree;  // white neighbors, 0 for red
};

inline RefState reference_state(const Graph& g, const VertexSet& d) {
  const int n = g.vertex_count();
  std::vector<char> dom(static_cast<std::size_t>(n), 0);
  for (Vertex v : d) {
    dom[v] = 1;
    for (Vertex u : g.neighbors(v)) dom[u] = 1;
  }
  RefState st;
  st.color.resize(static_cast<std::size_t>(n));
  st.white_degree.assign(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    int w = 0;
    for (Vertex u : g.neighbors(v)) w += dom[u] ? 0 : 1;
    if (!dom[v]) {
      st.color[v] = RefColor::kWhite;
      st.white_degree[v] = w;
    } else if (w > 0) {
      st.color[v] = RefColor::kBlue;
      st.white_degree[v] = w;
    } else {
      st.color[v] = RefColor::kRed;
    }
  }
  return st;
}

// Weights written out literally so they are not read back from the library.
inline std::int64_t reference_potential_d5(const Graph& g, const VertexSet& d) {
  static const std::int64_t blue[] = {0, 14, 17, 19, 21, 23};
  const RefState st = reference_state(g, d);
  std::int64_t f = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (st.color[v] == RefColor::kWhite) f += 35;
    if (st.color[v] == RefColor::kBlue) f += blue[std::min(st.white_degree[v], 5)];
  }
  return f;
}

inline std::int64_t reference_potential_d4(const Graph& g, const VertexSet& d) {
  static const std::int64_t blue[] = {0, 7, 8, 9, 10};
  const RefState st = reference_state(g, d);
  std::int64_t f = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (st.color[v] == RefColor::kWhite) f += 16;
    if (st.color[v] == RefColor::kBlue) f += blue[std::min(st.white_degree[v], 4)];
  }
  return f;
}

inline bool naive_dominates(const Graph& g, const VertexSet& d) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    bool ok = false;
    for (Vertex x : d) ok = ok || x == v || g.adjacent(x, v);
    if (!ok) return false;
  }
  return true;
}

// Smallest k such that some k-subset dominates, by plain enumeration.
inline int brute_force_gamma(const Graph& g, int max_k = 64) {
  const int n = g.vertex_count();
  for (int k = 0; k <= std::min(n, max_k); ++k) {
    VertexSet pick;
    bool found = false;
    std::function<void(int)> rec = [&](int start) {
      if (found) return;
      if (static_cast<int>(pick.size()) == k) {
        found = naive_dominates(g, pick);
        return;
      }
      for (int v = start; v < n && !found; ++v) {
        pick.push_back(v);
        rec(v + 1);
        pick.pop_back();
      }
    };
    rec(0);
    if (found) return k;
  }
  return -1;
}

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

inline Fraction add(Fraction a, Fraction b) {
  Fraction r{a.num * b.den + b.num * a.den, a.den * b.den};
  const std::int64_t g = std::gcd(r.num, r.den);
  return {r.num / g, r.den / g};
}

inline Fraction harmonic(int k) {
  Fraction h{0, 1};
  for (int i = 1; i <= k; ++i) h = add(h, {1, i});
  return h;
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

}  // namespace domset::testing

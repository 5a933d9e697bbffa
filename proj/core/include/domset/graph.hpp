#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace domset {

using Vertex = std::int32_t;
using VertexSet = std::vector<Vertex>;  // kept sorted ascending, no duplicates
using Edge = std::pair<Vertex, Vertex>;

// Thrown for malformed graph input or invalid construction requests.
// `line()` is the 1-based input line for parse errors, 0 otherwise.
class GraphError : public std::runtime_error {
 public:
  explicit GraphError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Immutable simple undirected graph in compressed adjacency form.
// Vertex ids are 0..n-1 and every neighbor list is sorted ascending.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from an edge list. Edge orientation is irrelevant.
  // Throws GraphError on self-loops, duplicates or out-of-range ids.
  static Graph from_edges(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v],
            neighbors_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }
  bool adjacent(Vertex u, Vertex v) const;

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  int vertex_count_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> neighbors_;
};

struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
};

// Throws GraphError for the empty graph.
DegreeStats degree_stats(const Graph& g);

// Edge-list text format: '#' comment lines, header "n m", then m lines "u v".
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
std::string serialize_graph(const Graph& g);

// Vertex set helpers. `normalize_set` sorts, and rejects duplicates or ids
// outside 0..n-1 with GraphError.
VertexSet normalize_set(VertexSet set, int vertex_count);
VertexSet closed_neighborhood(const Graph& g, std::span<const Vertex> set);
bool is_independent(const Graph& g, std::span<const Vertex> set);

// One vertex id per line; blank lines and '#' comments ignored.
VertexSet parse_vertex_set(std::istream& in);

}  // namespace domset

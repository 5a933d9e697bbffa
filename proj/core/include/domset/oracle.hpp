#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>

#include "domset/graph.hpp"

namespace domset {

// Throws GraphError for ids outside 0..n-1.
bool is_dominating(const Graph& g, std::span<const Vertex> set);

struct OracleOptions {
  std::uint64_t node_limit = 50'000'000;
  // Refuse graphs above this size unless raised; the search is exponential.
  // Graphs are held in 64-bit masks, so 64 is a hard ceiling.
  int max_vertices = 32;
  // Start from the move-rule solution when the minimum degree allows it.
  bool seed_incumbent = true;
};

struct OracleResult {
  int gamma = 0;
  VertexSet witness;
  std::uint64_t nodes_explored = 0;
};

// Raised when the node budget runs out before optimality is proven.
class OracleInconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact domination number by branching on the closed neighborhood of the
// lowest-id undominated vertex.
OracleResult minimum_dominating_set(const Graph& g, const OracleOptions& opts = {});

}  // namespace domset

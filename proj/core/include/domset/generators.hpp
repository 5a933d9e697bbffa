#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "domset/graph.hpp"

namespace domset {

enum class GeneratorModel { kRegular, kMinDegree, kNamed };

struct GeneratorSpec {
  GeneratorModel model = GeneratorModel::kRegular;
  int n = 0;
  int d = 0;
  std::uint64_t seed = 0;
  std::string name;  // fixture identifier, kNamed only
};

// Deterministic in `spec`. Throws GraphError for infeasible parameters or an
// unknown fixture name.
//
//  kRegular   - configuration model; the whole pairing is resampled whenever
//               it produces a loop or a multi-edge.
//  kMinDegree - starts empty and joins randomly chosen deficient vertices to
//               random non-neighbors until every degree is at least d.
//  kNamed     - see fixture_names().
Graph generate(const GeneratorSpec& spec);

std::vector<std::string> fixture_names();

// The chosen set D a fixture is meant to be examined with. For the claim
// gadgets this is the state in which exactly that claim's rule fires first.
VertexSet fixture_seed_set(const std::string& name);

// Random-order greedy maximal independent set.
VertexSet random_maximal_independent_set(const Graph& g, std::uint64_t seed);

// Describes a residual state to be realized as a concrete graph. Whites are
// indexed 0..white_count-1; each entry of `blues` lists the whites one blue
// vertex must see.
struct ResidualTemplate {
  int degree_floor = 5;
  int white_count = 0;
  std::vector<Edge> white_edges;
  std::vector<std::vector<int>> blues;
};

// Realization layout: vertex 0 is the only member of D and is adjacent to
// every blue. Whites occupy 1..white_count, the template's blues follow, and
// filler B1 vertices pad each white up to the degree floor. All blues form a
// clique (edges the residual discards), so every degree meets the floor.
struct RealizedTemplate {
  Graph graph;
  VertexSet seed_set;          // {0}
  Vertex first_white = 1;
  Vertex first_blue = 0;       // id of template blue #0
};

RealizedTemplate realize_template(const ResidualTemplate& tmpl);

}  // namespace domset

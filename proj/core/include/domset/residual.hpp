#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "domset/graph.hpp"

namespace domset {

using Potential = std::int64_t;

enum class SchemeId { kD5, kD4 };

// Weight table of the potential function for one minimum-degree regime.
//
// d5: white 35; blue classes B5..B1 = 23, 21, 19, 17, 14; threshold 105.
// d4: white 16; blue classes B4..B1 = 10, 9, 8, 7;        threshold 44.
//
// A blue vertex with white-degree above `top_class()` is counted in the top
// class. `charge_unit` scales discharging amounts to integers.
struct WeightScheme {
  SchemeId id = SchemeId::kD5;
  int degree_floor = 5;
  Potential white_weight = 35;
  std::array<Potential, 6> blue_weights{};  // index = white-degree class, [0] unused
  Potential threshold = 105;
  Potential charge_unit = 6;

  static const WeightScheme& d5();
  static const WeightScheme& d4();
  static const WeightScheme& by_id(SchemeId id);

  int top_class() const noexcept { return degree_floor; }
  int blue_class(int white_degree) const noexcept {
    return white_degree < top_class() ? white_degree : top_class();
  }
  Potential blue_weight(int white_degree) const noexcept {
    return blue_weights[static_cast<std::size_t>(blue_class(white_degree))];
  }
  // floor(white_weight * n / threshold): floor(n/3) or floor(4n/11).
  std::int64_t bound(std::int64_t n) const noexcept { return white_weight * n / threshold; }

  std::string name() const { return id == SchemeId::kD5 ? "d5" : "d4"; }
};

std::optional<SchemeId> parse_scheme(const std::string& name);

// Thrown when a potential is requested for a graph below the scheme's floor.
class SchemeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Color : std::uint8_t { kWhite = 0, kBlue = 1, kRed = 2 };

// Coloring of a graph relative to a chosen set D:
//   white - not in N[D];
//   blue  - in N[D] with some neighbor outside N[D];
//   red   - N[v] inside N[D].
// The residual edge set keeps only edges with a white endpoint, so
// white_degree(v) counts white neighbors for both white and blue vertices
// and is zero for red ones.
class ResidualGraph {
 public:
  const Graph& base() const noexcept { return *base_; }
  const std::shared_ptr<const Graph>& base_ptr() const noexcept { return base_; }
  const VertexSet& chosen() const noexcept { return chosen_; }
  bool in_chosen(Vertex v) const noexcept { return in_chosen_[v] != 0; }

  Color color(Vertex v) const noexcept { return color_[v]; }
  bool is_white(Vertex v) const noexcept { return color_[v] == Color::kWhite; }
  bool is_blue(Vertex v) const noexcept { return color_[v] == Color::kBlue; }
  bool is_red(Vertex v) const noexcept { return color_[v] == Color::kRed; }

  int white_degree(Vertex v) const noexcept { return white_degree_[v]; }
  // Residual blue-degree: d(v) - d_W(v) for whites, 0 otherwise.
  int blue_degree(Vertex v) const noexcept {
    return is_white(v) ? base_->degree(v) - white_degree_[v] : 0;
  }

  int vertex_count() const noexcept { return base_->vertex_count(); }
  int white_count() const noexcept { return white_count_; }
  int blue_count() const noexcept { return blue_count_; }
  VertexSet whites() const;
  VertexSet blues() const;
  bool all_red() const noexcept { return white_count_ == 0; }

 private:
  friend ResidualGraph build_residual(std::shared_ptr<const Graph>, VertexSet);

  std::shared_ptr<const Graph> base_;
  VertexSet chosen_;
  std::vector<char> in_chosen_;
  std::vector<Color> color_;
  std::vector<int> white_degree_;
  int white_count_ = 0;
  int blue_count_ = 0;
};

// D is normalized (sorted); throws GraphError for out-of-range or repeated ids.
ResidualGraph build_residual(std::shared_ptr<const Graph> g, VertexSet chosen);
ResidualGraph build_residual(const Graph& g, VertexSet chosen);

// Weighted count of white and blue vertices. Zero iff D dominates.
// Throws SchemeMismatch if min degree of the base graph is below the floor.
Potential potential(const ResidualGraph& r, const WeightScheme& s);

// Residual of D ∪ A. A must be nonempty and disjoint from D.
ResidualGraph extend(const ResidualGraph& r, std::span<const Vertex> added);

// potential(r) - potential(extend(r, A)); 0 for empty A.
Potential score_move(const ResidualGraph& r, std::span<const Vertex> added,
                     const WeightScheme& s);

struct BlueProfile {
  // class_members[i] = blues in class B_i, i = 1..top_class.
  std::vector<VertexSet> class_members;
  // B2 vertices adjacent to at least one white of white-degree 0.
  VertexSet special;
  std::vector<char> is_special;  // indexed by vertex
};

BlueProfile blue_profile(const ResidualGraph& r, const WeightScheme& s);

enum class ComponentKind { kPath, kCycle, kGeneral };
enum class WhiteClass { kW0, kW1, kW2, kW3Plus };

std::string to_string(ComponentKind kind);

struct WhiteComponent {
  // Paths: consecutive order from the smaller-id endpoint.
  // Cycles: from the smallest id toward its smaller-id neighbor.
  // General: ascending ids.
  VertexSet vertices;
  ComponentKind kind = ComponentKind::kGeneral;

  int size() const noexcept { return static_cast<int>(vertices.size()); }
};

struct WhiteComponentReport {
  std::vector<WhiteComponent> components;  // ordered by smallest member id
  std::vector<int> component_of;           // -1 for non-white vertices
  std::vector<std::optional<WhiteClass>> w_class;
  int p1 = 0, p2 = 0, c4 = 0, c5 = 0, c7 = 0, c10 = 0;
  std::map<int, int> other_paths;   // length -> count, length >= 3
  std::map<int, int> other_cycles;  // length -> count, lengths not listed above
  int general = 0;
};

WhiteComponentReport white_components(const ResidualGraph& r);

// Independent audit of the coloring straight from N[D]; returns a description
// of the first inconsistency, or nothing.
std::optional<std::string> audit_residual(const ResidualGraph& r);

}  // namespace domset

#include "domset/residual.hpp"

#include <algorithm>
#include <stdexcept>

namespace domset {

const WeightScheme& WeightScheme::d5() {
  static const WeightScheme s{SchemeId::kD5, 5, 35, {0, 14, 17, 19, 21, 23}, 105, 6};
  return s;
}

const WeightScheme& WeightScheme::d4() {
  static const WeightScheme s{SchemeId::kD4, 4, 16, {0, 7, 8, 9, 10, 0}, 44, 1};
  return s;
}

const WeightScheme& WeightScheme::by_id(SchemeId id) {
  return id == SchemeId::kD5 ? d5() : d4();
}

std::optional<SchemeId> parse_scheme(const std::string& name) {
  if (name == "d5") return SchemeId::kD5;
  if (name == "d4") return SchemeId::kD4;
  return std::nullopt;
}

VertexSet ResidualGraph::whites() const {
  VertexSet out;
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (is_white(v)) out.push_back(v);
  return out;
}

VertexSet ResidualGraph::blues() const {
  VertexSet out;
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (is_blue(v)) out.push_back(v);
  return out;
}

ResidualGraph build_residual(std::shared_ptr<const Graph> g, VertexSet chosen) {
  const int n = g->vertex_count();
  ResidualGraph r;
  r.chosen_ = normalize_set(std::move(chosen), n);
  r.in_chosen_.assign(static_cast<std::size_t>(n), 0);

  std::vector<char> dominated(static_cast<std::size_t>(n), 0);
  for (Vertex v : r.chosen_) {
    r.in_chosen_[v] = 1;
    dominated[v] = 1;
    for (Vertex u : g->neighbors(v)) dominated[u] = 1;
  }

  r.color_.assign(static_cast<std::size_t>(n), Color::kRed);
  r.white_degree_.assign(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    if (!dominated[v]) {
      r.color_[v] = Color::kWhite;
      ++r.white_count_;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    int w = 0;
    for (Vertex u : g->neighbors(v)) w += dominated[u] ? 0 : 1;
    r.white_degree_[v] = w;
    if (dominated[v] && w > 0) {
      r.color_[v] = Color::kBlue;
      ++r.blue_count_;
    }
    if (r.color_[v] == Color::kRed) r.white_degree_[v] = 0;
  }
  r.base_ = std::move(g);
  return r;
}

ResidualGraph build_residual(const Graph& g, VertexSet chosen) {
  return build_residual(std::make_shared<const Graph>(g), std::move(chosen));
}

Potential potential(const ResidualGraph& r, const WeightScheme& s) {
  if (r.vertex_count() == 0) return 0;
  if (degree_stats(r.base()).min_degree < s.degree_floor) {
    throw SchemeMismatch("scheme " + s.name() + " needs minimum degree >= " +
                         std::to_string(s.degree_floor));
  }
  Potential total = 0;
  for (Vertex v = 0; v < r.vertex_count(); ++v) {
    switch (r.color(v)) {
      case Color::kWhite:
        total += s.white_weight;
        break;
      case Color::kBlue:
        total += s.blue_weight(r.white_degree(v));
        break;
      case Color::kRed:
        break;
    }
  }
  return total;
}

ResidualGraph extend(const ResidualGraph& r, std::span<const Vertex> added) {
  if (added.empty()) throw std::invalid_argument("extend: empty vertex set");
  VertexSet next = r.chosen();
  for (Vertex v : added) {
    if (v < 0 || v >= r.vertex_count()) {
      throw GraphError("extend: vertex id " + std::to_string(v) + " out of range");
    }
    if (r.in_chosen(v)) {
      throw std::invalid_argument("extend: vertex " + std::to_string(v) +
                                  " is already in the chosen set");
    }
    next.push_back(v);
  }
  ResidualGraph out = build_residual(r.base_ptr(), std::move(next));
  for (Vertex v = 0; v < r.vertex_count(); ++v) {
    if (out.color(v) < r.color(v)) {
      throw std::logic_error("extend: color of vertex " + std::to_string(v) +
                             " moved backwards");
    }
  }
  return out;
}

Potential score_move(const ResidualGraph& r, std::span<const Vertex> added,
                     const WeightScheme& s) {
  if (added.empty()) return 0;
  return potential(r, s) - potential(extend(r, added), s);
}

BlueProfile blue_profile(const ResidualGraph& r, const WeightScheme& s) {
  const int n = r.vertex_count();
  BlueProfile p;
  p.class_members.resize(static_cast<std::size_t>(s.top_class()) + 1);
  p.is_special.assign(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    if (!r.is_blue(v)) continue;
    p.class_members[static_cast<std::size_t>(s.blue_class(r.white_degree(v)))].push_back(v);
    if (r.white_degree(v) != 2) continue;
    for (Vertex u : r.base().neighbors(v)) {
      if (r.is_white(u) && r.white_degree(u) == 0) {
        p.is_special[v] = 1;
        p.special.push_back(v);
        break;
      }
    }
  }
  return p;
}

std::string to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::kPath:
      return "path";
    case ComponentKind::kCycle:
      return "cycle";
    case ComponentKind::kGeneral:
      return "general";
  }
  return "?";
}

namespace {

// Smallest-id white neighbor of v other than `skip`, or -1.
Vertex next_white(const ResidualGraph& r, Vertex v, Vertex skip) {
  for (Vertex u : r.base().neighbors(v))
    if (u != skip && r.is_white(u)) return u;
  return -1;
}

// Walks a path or cycle component starting at `start`, stepping first to
// `first` (or the smallest-id white neighbor when first == -1).
VertexSet walk(const ResidualGraph& r, Vertex start, Vertex first) {
  VertexSet seq{start};
  Vertex prev = start;
  Vertex cur = first == -1 ? next_white(r, start, -1) : first;
  while (cur != -1 && cur != start) {
    seq.push_back(cur);
    Vertex nxt = next_white(r, cur, prev);
    prev = cur;
    cur = nxt;
  }
  return seq;
}

}  // namespace

WhiteComponentReport white_components(const ResidualGraph& r) {
  const int n = r.vertex_count();
  WhiteComponentReport rep;
  rep.component_of.assign(static_cast<std::size_t>(n), -1);
  rep.w_class.assign(static_cast<std::size_t>(n), std::nullopt);

  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (!r.is_white(root) || rep.component_of[root] != -1) continue;
    const int id = static_cast<int>(rep.components.size());
    VertexSet members;
    int max_wdeg = 0;
    int edge_ends = 0;
    stack.assign(1, root);
    rep.component_of[root] = id;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      max_wdeg = std::max(max_wdeg, r.white_degree(v));
      edge_ends += r.white_degree(v);
      for (Vertex u : r.base().neighbors(v)) {
        if (r.is_white(u) && rep.component_of[u] == -1) {
          rep.component_of[u] = id;
          stack.push_back(u);
        }
      }
    }
    std::sort(members.begin(), members.end());

    WhiteComponent comp;
    const int size = static_cast<int>(members.size());
    if (max_wdeg > 2) {
      comp.kind = ComponentKind::kGeneral;
      comp.vertices = std::move(members);
      ++rep.general;
    } else if (edge_ends / 2 == size && size >= 3) {
      comp.kind = ComponentKind::kCycle;
      Vertex start = members.front();
      // Smallest white neighbor of the smallest member.
      comp.vertices = walk(r, start, next_white(r, start, -1));
      switch (size) {
        case 4: ++rep.c4; break;
        case 5: ++rep.c5; break;
        case 7: ++rep.c7; break;
        case 10: ++rep.c10; break;
        default: ++rep.other_cycles[size]; break;
      }
    } else {
      comp.kind = ComponentKind::kPath;
      Vertex start = members.front();
      if (size > 1) {
        for (Vertex v : members) {
          if (r.white_degree(v) == 1) {
            start = v;  // members are sorted, so this is the smaller endpoint
            break;
          }
        }
      }
      comp.vertices = size == 1 ? VertexSet{start} : walk(r, start, -1);
      switch (size) {
        case 1: ++rep.p1; break;
        case 2: ++rep.p2; break;
        default: ++rep.other_paths[size]; break;
      }
    }
    for (Vertex v : comp.vertices) {
      int d = r.white_degree(v);
      rep.w_class[v] = d == 0   ? WhiteClass::kW0
                       : d == 1 ? WhiteClass::kW1
                       : d == 2 ? WhiteClass::kW2
                                : WhiteClass::kW3Plus;
    }
    rep.components.push_back(std::move(comp));
  }
  return rep;
}

std::optional<std::string> audit_residual(const ResidualGraph& r) {
  const Graph& g = r.base();
  const int n = g.vertex_count();
  VertexSet dom = closed_neighborhood(g, r.chosen());
  std::vector<char> in_dom(static_cast<std::size_t>(n), 0);
  for (Vertex v : dom) in_dom[v] = 1;

  for (Vertex v = 0; v < n; ++v) {
    bool closed_inside = in_dom[v] != 0;
    int whites = 0;
    for (Vertex u : g.neighbors(v)) {
      closed_inside = closed_inside && in_dom[u];
      whites += in_dom[u] ? 0 : 1;
    }
    Color expect = !in_dom[v] ? Color::kWhite : closed_inside ? Color::kRed : Color::kBlue;
    std::string at = "vertex " + std::to_string(v) + ": ";
    if (r.color(v) != expect) return at + "color disagrees with N[D]";
    if (expect != Color::kRed && r.white_degree(v) != whites) return at + "white-degree mismatch";
    if (expect == Color::kRed && r.white_degree(v) != 0) return at + "red vertex with white-degree";
    if (r.in_chosen(v) && expect != Color::kRed) return at + "member of D is not red";
    if (expect == Color::kWhite) {
      for (Vertex u : g.neighbors(v)) {
        if (r.is_red(u)) return at + "white vertex has a red neighbor";
      }
      if (r.white_degree(v) + r.blue_degree(v) != g.degree(v)) return at + "degree split";
    }
    if (expect == Color::kBlue && (whites < 1 || whites >= g.degree(v))) {
      return at + "blue white-degree outside [1, d(v))";
    }
  }
  return std::nullopt;
}

}  // namespace domset

#include "domset/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_set>

namespace domset {

Graph Graph::from_edges(int vertex_count, std::span<const Edge> edges) {
  if (vertex_count < 0) throw GraphError("negative vertex count");
  Graph g;
  g.vertex_count_ = vertex_count;
  std::vector<std::size_t> deg(static_cast<std::size_t>(vertex_count), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw GraphError("vertex id out of range in edge (" + std::to_string(u) +
                       ", " + std::to_string(v) + ")");
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(static_cast<std::size_t>(vertex_count) + 1, 0);
  for (int v = 0; v < vertex_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.neighbors_.resize(g.offsets_.back());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    g.neighbors_[fill[u]++] = v;
    g.neighbors_[fill[v]++] = u;
  }
  for (int v = 0; v < vertex_count; ++v) {
    auto first = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw GraphError("duplicate edge (" + std::to_string(std::min(v, *dup)) +
                       ", " + std::to_string(std::max(v, *dup)) + ")");
    }
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

DegreeStats degree_stats(const Graph& g) {
  if (g.vertex_count() == 0) throw GraphError("degree statistics of the empty graph");
  DegreeStats stats{g.degree(0), g.degree(0)};
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    stats.min_degree = std::min(stats.min_degree, g.degree(v));
    stats.max_degree = std::max(stats.max_degree, g.degree(v));
  }
  return stats;
}

namespace {

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

// Parses exactly `count` non-negative integers separated by single spaces.
bool parse_ints(const std::string& line, std::int64_t* out, int count) {
  const char* p = line.data();
  const char* end = p + line.size();
  if (end != p && end[-1] == '\r') --end;
  for (int i = 0; i < count; ++i) {
    if (i > 0) {
      if (p == end || *p != ' ') return false;
      ++p;
    }
    auto [next, ec] = std::from_chars(p, end, out[i]);
    if (ec != std::errc() || next == p || out[i] < 0) return false;
    p = next;
  }
  return p == end;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::int64_t header[2] = {-1, -1};
  bool have_header = false;
  std::vector<Edge> edges;
  std::size_t header_line = 0;
  std::unordered_set<std::int64_t> seen;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.starts_with('#') || is_blank(line)) continue;
    if (!have_header) {
      if (!parse_ints(line, header, 2) || header[0] > INT32_MAX) {
        throw GraphError("line " + std::to_string(line_no) +
                             ": malformed header, expected \"n m\"",
                         line_no);
      }
      have_header = true;
      header_line = line_no;
      edges.reserve(static_cast<std::size_t>(header[1]));
      continue;
    }
    std::int64_t uv[2];
    if (!parse_ints(line, uv, 2)) {
      throw GraphError("line " + std::to_string(line_no) +
                           ": malformed edge line, expected \"u v\"",
                       line_no);
    }
    if (static_cast<std::int64_t>(edges.size()) >= header[1]) {
      throw GraphError("line " + std::to_string(line_no) + ": more than " +
                           std::to_string(header[1]) + " edges",
                       line_no);
    }
    auto [u, v] = std::pair{uv[0], uv[1]};
    if (u >= header[0] || v >= header[0]) {
      throw GraphError("line " + std::to_string(line_no) + ": vertex id out of range",
                       line_no);
    }
    if (u == v) {
      throw GraphError("line " + std::to_string(line_no) + ": self-loop", line_no);
    }
    edges.emplace_back(static_cast<Vertex>(std::min(u, v)),
                       static_cast<Vertex>(std::max(u, v)));
    // Duplicates are detected here so the error carries the offending line.
    if (!seen.insert(std::min(u, v) * header[0] + std::max(u, v)).second) {
      throw GraphError("line " + std::to_string(line_no) + ": duplicate edge",
                       line_no);
    }
  }
  if (!have_header) throw GraphError("missing header line \"n m\"", line_no);
  if (static_cast<std::int64_t>(edges.size()) != header[1]) {
    throw GraphError("line " + std::to_string(header_line) + ": header declares " +
                         std::to_string(header[1]) + " edges, found " +
                         std::to_string(edges.size()),
                     header_line);
  }
  return Graph::from_edges(static_cast<int>(header[0]), edges);
}

Graph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

VertexSet normalize_set(VertexSet set, int vertex_count) {
  std::sort(set.begin(), set.end());
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] < 0 || set[i] >= vertex_count) {
      throw GraphError("vertex id " + std::to_string(set[i]) + " out of range");
    }
    if (i > 0 && set[i] == set[i - 1]) {
      throw GraphError("vertex id " + std::to_string(set[i]) + " listed twice");
    }
  }
  return set;
}

VertexSet closed_neighborhood(const Graph& g, std::span<const Vertex> set) {
  std::vector<char> mark(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : set) {
    mark[v] = 1;
    for (Vertex u : g.neighbors(v)) mark[u] = 1;
  }
  VertexSet out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (mark[v]) out.push_back(v);
  }
  return out;
}

bool is_independent(const Graph& g, std::span<const Vertex> set) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : set) in[v] = 1;
  for (Vertex v : set) {
    for (Vertex u : g.neighbors(v)) {
      if (in[u]) return false;
    }
  }
  return true;
}

VertexSet parse_vertex_set(std::istream& in) {
  VertexSet out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.starts_with('#') || is_blank(line)) continue;
    std::int64_t v;
    if (!parse_ints(line, &v, 1) || v > INT32_MAX) {
      throw GraphError("line " + std::to_string(line_no) + ": expected one vertex id",
                       line_no);
    }
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

}  // namespace domset

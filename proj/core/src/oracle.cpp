#include "domset/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "domset/rules.hpp"

namespace domset {

bool is_dominating(const Graph& g, std::span<const Vertex> set) {
  std::vector<char> dominated(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : set) {
    if (v < 0 || v >= g.vertex_count()) {
      throw GraphError("vertex id " + std::to_string(v) + " out of range");
    }
    dominated[v] = 1;
    for (Vertex u : g.neighbors(v)) dominated[u] = 1;
  }
  return std::all_of(dominated.begin(), dominated.end(), [](char c) { return c != 0; });
}

namespace {

using Mask = std::uint64_t;

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, std::uint64_t node_limit)
      : n_(g.vertex_count()), node_limit_(node_limit) {
    closed_.resize(static_cast<std::size_t>(n_));
    int max_closed = 1;
    for (Vertex v = 0; v < n_; ++v) {
      Mask m = Mask{1} << v;
      for (Vertex u : g.neighbors(v)) m |= Mask{1} << u;
      closed_[v] = m;
      max_closed = std::max(max_closed, std::popcount(m));
    }
    max_closed_ = max_closed;
    full_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
  }

  void set_incumbent(VertexSet d) { best_ = std::move(d); have_best_ = true; }

  OracleResult run() {
    current_.clear();
    search(0);
    return {static_cast<int>(best_.size()), best_, nodes_};
  }

 private:
  void search(Mask dominated) {
    if (++nodes_ > node_limit_) {
      throw OracleInconclusive("node limit of " + std::to_string(node_limit_) +
                               " exceeded before optimality was proven");
    }
    const Mask open = full_ & ~dominated;
    if (open == 0) {
      if (!have_best_ || current_.size() < best_.size()) {
        best_ = current_;
        std::sort(best_.begin(), best_.end());
        have_best_ = true;
      }
      return;
    }
    // Every further vertex covers at most max_closed_ open vertices.
    const std::size_t lower =
        current_.size() + static_cast<std::size_t>((std::popcount(open) + max_closed_ - 1) / max_closed_);
    if (have_best_ && lower >= best_.size()) return;

    const Vertex v = std::countr_zero(open);
    // Some member of N[v] is in every dominating set; try the ones covering
    // the most open vertices first.
    std::vector<std::pair<int, Vertex>> choices;
    for (Mask m = closed_[v]; m != 0; m &= m - 1) {
      Vertex u = std::countr_zero(m);
      choices.emplace_back(-std::popcount(closed_[u] & open), u);
    }
    std::sort(choices.begin(), choices.end());
    for (auto [gain, u] : choices) {
      current_.push_back(u);
      search(dominated | closed_[u]);
      current_.pop_back();
    }
  }

  int n_;
  std::uint64_t node_limit_;
  std::vector<Mask> closed_;
  int max_closed_ = 1;
  Mask full_ = 0;
  VertexSet current_;
  VertexSet best_;
  bool have_best_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

OracleResult minimum_dominating_set(const Graph& g, const OracleOptions& opts) {
  const int n = g.vertex_count();
  if (n < 1) throw GraphError("minimum_dominating_set: empty graph");
  if (n > opts.max_vertices || n > 64) {
    throw GraphError("minimum_dominating_set: n=" + std::to_string(n) +
                     " exceeds the configured limit of " +
                     std::to_string(std::min(opts.max_vertices, 64)) + " vertices");
  }
  BranchAndBound bb(g, opts.node_limit);
  if (opts.seed_incumbent) {
    const int delta = degree_stats(g).min_degree;
    if (delta >= 4) {
      const WeightScheme& s = delta >= 5 ? WeightScheme::d5() : WeightScheme::d4();
      bb.set_incumbent(solve(g, s).dominating_set);
    }
  }
  return bb.run();
}

}  // namespace domset

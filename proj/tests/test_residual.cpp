#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "domset/generators.hpp"
#include "domset/oracle.hpp"
#include "domset/residual.hpp"
#include "support.hpp"

namespace domset {
namespace {

using testing::RefColor;

Graph named(const std::string& name) { return generate({GeneratorModel::kNamed, 0, 0, 0, name}); }

// K_{5,5}: a0..a4 = 0..4, b0..b4 = 5..9.
constexpr Vertex a0 = 0, b0 = 5;

Color to_color(RefColor c) {
  return c == RefColor::kWhite ? Color::kWhite : c == RefColor::kBlue ? Color::kBlue : Color::kRed;
}

void expect_matches_reference(const Graph& g, const VertexSet& d) {
  const ResidualGraph r = build_residual(g, d);
  const testing::RefState ref = testing::reference_state(g, d);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    ASSERT_EQ(r.color(v), to_color(ref.color[v])) << "vertex " << v;
    ASSERT_EQ(r.white_degree(v), ref.white_degree[v]) << "vertex " << v;
  }
  EXPECT_EQ(audit_residual(r), std::nullopt);
}

VertexSet random_subset(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  VertexSet s;
  for (Vertex v = 0; v < n; ++v)
    if (coin(rng)) s.push_back(v);
  return s;
}

TEST(WeightScheme, Tables) {
  const WeightScheme& d5 = WeightScheme::d5();
  EXPECT_EQ(d5.white_weight, 35);
  EXPECT_EQ(d5.threshold, 3 * d5.white_weight);
  for (int k = 1; k < 5; ++k) EXPECT_LT(d5.blue_weights[k], d5.blue_weights[k + 1]);
  EXPECT_LT(d5.blue_weights[5], d5.white_weight);
  const WeightScheme& d4 = WeightScheme::d4();
  EXPECT_EQ(d4.white_weight * 11, d4.threshold * 4);
  for (int k = 1; k < 4; ++k) EXPECT_LT(d4.blue_weights[k], d4.blue_weights[k + 1]);
  EXPECT_EQ(d5.blue_weight(9), 23);  // capped at the top class
  EXPECT_EQ(d4.blue_weight(7), 10);
  EXPECT_EQ(parse_scheme("d4"), SchemeId::kD4);
  EXPECT_EQ(parse_scheme("d6"), std::nullopt);
}

TEST(BuildResidual, K55WithA0) {
  const Graph g = named("k55");
  const ResidualGraph r = build_residual(g, {a0});
  EXPECT_TRUE(r.is_red(a0));
  for (Vertex b = 5; b < 10; ++b) {
    EXPECT_TRUE(r.is_blue(b));
    EXPECT_EQ(r.white_degree(b), 4);
  }
  for (Vertex a = 1; a < 5; ++a) {
    EXPECT_TRUE(r.is_white(a));
    EXPECT_EQ(r.white_degree(a), 0);
  }
  expect_matches_reference(g, {a0});
}

TEST(BuildResidual, WholeVertexSetIsAllRed) {
  const Graph g = named("icosahedron");
  VertexSet all(12);
  std::iota(all.begin(), all.end(), 0);
  const ResidualGraph r = build_residual(g, all);
  EXPECT_TRUE(r.all_red());
  for (Vertex v = 0; v < 12; ++v) EXPECT_TRUE(r.is_red(v));
  EXPECT_EQ(potential(r, WeightScheme::d5()), 0);
  EXPECT_TRUE(white_components(r).components.empty());
}

TEST(BuildResidual, PendantK6WithX) {
  const Graph g = named("pendant_k6");
  const ResidualGraph r = build_residual(g, {0});
  EXPECT_TRUE(r.is_red(0));
  EXPECT_TRUE(r.is_white(6));
  EXPECT_EQ(r.white_degree(6), 0);
  for (Vertex b = 1; b <= 5; ++b) {
    EXPECT_TRUE(r.is_blue(b));
    EXPECT_EQ(r.white_degree(b), 1);
  }
}

TEST(BuildResidual, RejectsBadSets) {
  const Graph g = named("k6");
  EXPECT_THROW(build_residual(g, {6}), GraphError);
  EXPECT_THROW(build_residual(g, {1, 1}), GraphError);
}

TEST(BuildResidual, MatchesDefinitionOnRandomStates) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    const Graph g = generate({i % 2 ? GeneratorModel::kRegular : GeneratorModel::kMinDegree,
                              24, 4 + i % 2, static_cast<std::uint64_t>(i), ""});
    expect_matches_reference(g, random_subset(24, 0.02 + 0.01 * (i % 10), rng));
  }
}

TEST(BuildResidual, ColorInvariantsHold) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    const Graph g = generate({GeneratorModel::kMinDegree, 30, 5, static_cast<std::uint64_t>(i), ""});
    const ResidualGraph r = build_residual(g, random_subset(30, 0.08, rng));
    for (Vertex v = 0; v < 30; ++v) {
      if (r.in_chosen(v)) EXPECT_TRUE(r.is_red(v));
      if (r.is_white(v)) {
        for (Vertex u : g.neighbors(v)) EXPECT_FALSE(r.is_red(u));
        EXPECT_EQ(r.white_degree(v) + r.blue_degree(v), g.degree(v));
        EXPECT_GE(r.blue_degree(v), 5 - std::min(r.white_degree(v), 5));
      }
      if (r.is_blue(v)) {
        EXPECT_GE(r.white_degree(v), 1);
        EXPECT_LT(r.white_degree(v), g.degree(v));
      }
    }
  }
}

TEST(Potential, Examples) {
  const Graph k55 = named("k55");
  const auto& d5 = WeightScheme::d5();
  EXPECT_EQ(potential(build_residual(k55, {}), d5), 350);
  EXPECT_EQ(potential(build_residual(k55, {a0}), d5), 4 * 35 + 5 * 21);
  EXPECT_EQ(potential(build_residual(named("pendant_k6"), {0}), d5), 35 + 5 * 14);
  EXPECT_EQ(potential(build_residual(named("pendant_k5"), {0}), WeightScheme::d4()), 16 + 4 * 7);
}

TEST(Potential, EmptySetIsWhiteWeightTimesN) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = generate({GeneratorModel::kMinDegree, 15 + static_cast<int>(seed), 5, seed, ""});
    EXPECT_EQ(potential(build_residual(g, {}), WeightScheme::d5()), 35 * g.vertex_count());
    EXPECT_EQ(potential(build_residual(g, {}), WeightScheme::d4()), 16 * g.vertex_count());
  }
}

TEST(Potential, MatchesReferenceAndZeroIffDominating) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 80; ++i) {
    const Graph g = generate({GeneratorModel::kMinDegree, 20, 5, static_cast<std::uint64_t>(i), ""});
    const VertexSet d = random_subset(20, 0.05 * (i % 8), rng);
    const ResidualGraph r = build_residual(g, d);
    EXPECT_EQ(potential(r, WeightScheme::d5()), testing::reference_potential_d5(g, d));
    EXPECT_EQ(potential(r, WeightScheme::d4()), testing::reference_potential_d4(g, d));
    EXPECT_EQ(potential(r, WeightScheme::d5()) == 0, testing::naive_dominates(g, d));
  }
}

TEST(Potential, SchemeMismatch) {
  const Graph g = named("pendant_k5");
  EXPECT_THROW(potential(build_residual(g, {}), WeightScheme::d5()), SchemeMismatch);
  EXPECT_EQ(potential(build_residual(Graph{}, {}), WeightScheme::d5()), 0);
}

TEST(Extend, Examples) {
  const Graph k55 = named("k55");
  const ResidualGraph r = build_residual(k55, {a0});
  const ResidualGraph all = extend(r, VertexSet{b0});
  EXPECT_TRUE(all.all_red());
  EXPECT_EQ(potential(all, WeightScheme::d5()), 0);
  EXPECT_THROW(extend(r, VertexSet{a0}), std::invalid_argument);
  EXPECT_THROW(extend(r, VertexSet{}), std::invalid_argument);
  const ResidualGraph p = extend(build_residual(named("pendant_k6"), {0}), VertexSet{6});
  EXPECT_TRUE(p.all_red());
}

TEST(Extend, ColorsAreMonotone) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    const Graph g = generate({GeneratorModel::kRegular, 20, 5, static_cast<std::uint64_t>(i), ""});
    const VertexSet d = random_subset(20, 0.1, rng);
    const ResidualGraph r = build_residual(g, d);
    VertexSet a;
    for (Vertex v : random_subset(20, 0.15, rng))
      if (!r.in_chosen(v)) a.push_back(v);
    if (a.empty()) continue;
    const ResidualGraph next = extend(r, a);
    for (Vertex v = 0; v < 20; ++v) EXPECT_GE(next.color(v), r.color(v));
  }
}

TEST(ScoreMove, Examples) {
  const Graph k55 = named("k55");
  const auto& d5 = WeightScheme::d5();
  EXPECT_EQ(score_move(build_residual(k55, {}), VertexSet{a0}, d5), 105);
  EXPECT_EQ(score_move(build_residual(k55, {a0}), VertexSet{b0}, d5), 245);
  EXPECT_EQ(score_move(build_residual(k55, {a0}), VertexSet{}, d5), 0);
}

TEST(ScoreMove, NonNegativeAndAdditiveUnderSequencing) {
  std::mt19937_64 rng(21);
  const auto& d5 = WeightScheme::d5();
  for (int i = 0; i < 60; ++i) {
    const Graph g = generate({GeneratorModel::kMinDegree, 22, 5, static_cast<std::uint64_t>(i), ""});
    const ResidualGraph r = build_residual(g, random_subset(22, 0.05, rng));
    VertexSet a, b;
    for (Vertex v : random_subset(22, 0.2, rng)) {
      if (r.in_chosen(v)) continue;
      (rng() % 2 ? a : b).push_back(v);
    }
    if (a.empty() || b.empty()) continue;
    const Potential sa = score_move(r, a, d5);
    const ResidualGraph ra = extend(r, a);
    const Potential sb = score_move(ra, b, d5);
    VertexSet ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    EXPECT_GE(sa, 0);
    EXPECT_GE(sb, 0);
    EXPECT_EQ(score_move(r, ab, d5), sa + sb);
  }
}

TEST(BlueProfile, Examples) {
  const auto& d5 = WeightScheme::d5();
  const BlueProfile k = blue_profile(build_residual(named("k55"), {a0}), d5);
  EXPECT_EQ(k.class_members[4], (VertexSet{5, 6, 7, 8, 9}));
  EXPECT_TRUE(k.special.empty());
  const BlueProfile p = blue_profile(build_residual(named("pendant_k6"), {0}), d5);
  EXPECT_EQ(p.class_members[1], (VertexSet{1, 2, 3, 4, 5}));
  EXPECT_TRUE(p.special.empty());
}

TEST(BlueProfile, GadgetDHasDoubleW0Special) {
  for (const char* name : {"gadget_d", "gadget_j"}) {
    const Graph g = named(name);
    const ResidualGraph r = build_residual(g, fixture_seed_set(name));
    ASSERT_EQ(audit_residual(r), std::nullopt);
    const WeightScheme& s = std::string(name) == "gadget_d" ? WeightScheme::d5() : WeightScheme::d4();
    const BlueProfile p = blue_profile(r, s);
    ASSERT_FALSE(p.special.empty()) << name;
    bool double_w0 = false;
    for (Vertex v : p.special) {
      int w0 = 0;
      for (Vertex u : g.neighbors(v)) w0 += r.is_white(u) && r.white_degree(u) == 0;
      double_w0 = double_w0 || w0 == 2;
      EXPECT_EQ(r.white_degree(v), 2);
    }
    EXPECT_TRUE(double_w0) << name;
  }
}

TEST(BlueProfile, ClassesPartitionBlues) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 30; ++i) {
    const Graph g = generate({GeneratorModel::kMinDegree, 25, 5, static_cast<std::uint64_t>(i), ""});
    const ResidualGraph r = build_residual(g, random_subset(25, 0.1, rng));
    const BlueProfile p = blue_profile(r, WeightScheme::d5());
    VertexSet all;
    for (const auto& c : p.class_members) all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    EXPECT_EQ(all, r.blues());
    for (Vertex v : p.special) {
      EXPECT_EQ(r.white_degree(v), 2);
      EXPECT_TRUE(std::binary_search(p.class_members[2].begin(), p.class_members[2].end(), v));
    }
  }
}

TEST(WhiteComponents, K55FourIsolatedWhites) {
  const WhiteComponentReport rep = white_components(build_residual(named("k55"), {a0}));
  EXPECT_EQ(rep.p1, 4);
  EXPECT_EQ(rep.components.size(), 4u);
}

TEST(WhiteComponents, CirculantGeneralComponent) {
  const WhiteComponentReport rep = white_components(build_residual(named("circulant_9_12"), {0}));
  ASSERT_EQ(rep.components.size(), 1u);
  EXPECT_EQ(rep.components[0].kind, ComponentKind::kGeneral);
  EXPECT_EQ(rep.components[0].vertices, (VertexSet{3, 4, 5, 6}));
  EXPECT_EQ(rep.general, 1);
}

TEST(WhiteComponents, SequencesFollowEdges) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 80; ++i) {
    const Graph g = generate({GeneratorModel::kRegular, 30, 5, static_cast<std::uint64_t>(i), ""});
    const ResidualGraph r = build_residual(g, random_subset(30, 0.12, rng));
    const WhiteComponentReport rep = white_components(r);
    int total = 0;
    for (const auto& c : rep.components) {
      total += c.size();
      if (c.kind == ComponentKind::kGeneral) continue;
      for (std::size_t k = 0; k + 1 < c.vertices.size(); ++k)
        EXPECT_TRUE(g.adjacent(c.vertices[k], c.vertices[k + 1]));
      for (Vertex v : c.vertices) EXPECT_LE(r.white_degree(v), 2);
      if (c.kind == ComponentKind::kCycle) {
        EXPECT_TRUE(g.adjacent(c.vertices.front(), c.vertices.back()));
        EXPECT_EQ(c.vertices.front(), *std::min_element(c.vertices.begin(), c.vertices.end()));
        EXPECT_LT(c.vertices[1], c.vertices.back());
      } else if (c.size() > 1) {
        EXPECT_LT(c.vertices.front(), c.vertices.back());
      }
    }
    EXPECT_EQ(total, r.white_count());
  }
}

}  // namespace
}  // namespace domset

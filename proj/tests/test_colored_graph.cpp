#include <gtest/gtest.h>

#include <random>

#include "crysrig/colored_graph.hpp"
#include "crysrig/random_graphs.hpp"

using namespace crysrig;

namespace {

const GroupContext kG4 = GroupContext::crystallographic(4);

}  // namespace

TEST(ColoredGraph, RejectsBadEdges) {
  ColoredGraph g(kG4, 2);
  EXPECT_THROW(g.add_edge(0, 2, GroupElement::identity()), std::out_of_range);
  EXPECT_EQ(g.add_edge(0, 1, GroupElement::rotation(1)), 0);
  EXPECT_EQ(g.edge_count(), 1);
}

TEST(Rho, ComposesForwardAndInvertsBackward) {
  ColoredGraph g(kG4, 2);
  g.add_edge(0, 1, {{1, 0}, 1});
  g.add_edge(1, 0, {{0, 2}, 0});
  const Walk closed{{0, true}, {1, true}};
  EXPECT_EQ(rho(closed, g), compose(g.edge(0).color, g.edge(1).color, kG4));
  const Walk back{{0, true}, {0, false}};
  EXPECT_TRUE(rho(back, g).is_identity());
  const Walk broken{{0, true}, {0, true}};
  EXPECT_THROW(rho(broken, g), std::invalid_argument);
}

TEST(MarkedGraph, TreeImagesMatchTreePaths) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const ColoredGraph g = random_colored_graph(kG4, 5, 7, rng);
    const MarkedGraph m = MarkedGraph::build_random(g, rng);
    for (int v = 0; v < g.vertex_count(); ++v) {
      const Walk path = m.tree_path(v);
      EXPECT_EQ(rho(path, g), m.tree_image(v));
      if (path.empty()) {
        EXPECT_EQ(m.base(m.component_of(v)), v);
      }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
      if (m.in_forest(e)) continue;
      EXPECT_EQ(rho(fundamental_closed_path(e, m), g), m.fundamental_image(e));
    }
  }
}

// The component subgroup does not depend on the choice of base and forest up
// to conjugacy, so its invariants are stable.
TEST(MarkedGraph, InvariantsIndependentOfForest) {
  std::mt19937_64 rng(13);
  for (int k : {2, 3, 4, 6}) {
    const GroupContext ctx = GroupContext::crystallographic(k);
    for (int trial = 0; trial < 40; ++trial) {
      const ColoredGraph g = random_colored_graph(ctx, 4, 6, rng);
      const GraphInvariants a = invariants_of(MarkedGraph::build(g));
      const GraphInvariants b = invariants_of(MarkedGraph::build_random(g, rng));
      EXPECT_EQ(a.rep, b.rep);
      EXPECT_EQ(a.t_sum(), b.t_sum());
      EXPECT_EQ(a.cent_sum(), b.cent_sum());
      EXPECT_EQ(a.teich, b.teich);
      EXPECT_EQ(a.components.size(), b.components.size());
    }
  }
}

TEST(GraphInvariants, IsolatedVerticesAreComponents) {
  ColoredGraph g(kG4, 3);
  g.add_edge(0, 0, GroupElement::rotation(1));
  const GraphInvariants inv = graph_invariants(g);
  EXPECT_EQ(inv.components.size(), 3u);
  EXPECT_EQ(inv.t_sum(), 0 + 2 + 2);
  const std::vector<int> loop{0};
  EXPECT_EQ(graph_invariants(g, loop).components.size(), 1u);
  EXPECT_EQ(graph_invariants(g, loop).vertices, 1);
}

TEST(ColoredGraph, ConeProjectionDropsTranslations) {
  ColoredGraph g(kG4, 1);
  g.add_edge(0, 0, {{3, -1}, 2});
  const ColoredGraph c = project_to_cone(g);
  EXPECT_TRUE(c.context().is_cone());
  EXPECT_EQ(c.edge(0).color, GroupElement::rotation(2));
}

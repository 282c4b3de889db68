#include <gtest/gtest.h>

#include <cmath>

#include "crysrig/graph_format.hpp"
#include "crysrig/lift.hpp"
#include "crysrig/rigidity.hpp"
#include "crysrig/svg.hpp"

using namespace crysrig;

namespace {

ColoredGraph fixture(const char* name) { return read_colored_graph(std::string(CRYSRIG_FIXTURES "/") + name); }

}  // namespace

TEST(Lift, VertexCountIsBoxTimesOrbit) {
  const ColoredGraph g = fixture("gamma2_laman.txt");
  const Framework fw = realize_generic_framework(g, 1);
  const LiftFragment lift = lift_fragment(g, fw.realization, LiftBox{-1, 1, 0, 1});
  EXPECT_EQ(lift.vertices.size(), 6u * 2u * 2u);
  for (const auto& [a, b] : lift.edges) {
    const LiftVertex& u = lift.vertices[a];
    const LiftVertex& w = lift.vertices[b];
    // Some edge of the quotient joins the two fibers with the right color.
    bool matched = false;
    for (const ColoredEdge& e : g.edges()) {
      matched = matched || (e.tail == u.vertex && e.head == w.vertex && compose(u.element, e.color, g.context()) == w.element);
    }
    EXPECT_TRUE(matched);
  }
}

TEST(Lift, EdgeLengthsMatchTheQuotient) {
  const ColoredGraph g = fixture("gamma4_laman.txt");
  const Framework fw = realize_generic_framework(g, 2);
  const LiftFragment lift = lift_fragment(g, fw.realization, LiftBox{-2, 2, -2, 2});
  ASSERT_FALSE(lift.edges.empty());
  for (const auto& [a, b] : lift.edges) {
    const Vec2<Real> d = lift.vertices[b].position - lift.vertices[a].position;
    const double len = std::hypot(d.x.value(), d.y.value());
    bool matched = false;
    for (double l : fw.lengths) matched = matched || std::abs(l - len) < 1e-9;
    EXPECT_TRUE(matched) << len;
  }
}

TEST(Lift, ConeLiftsToKSheets) {
  const ColoredGraph g = fixture("cone3_loop.txt");
  const Framework fw = realize_generic_framework(g, 1);
  const LiftFragment lift = lift_fragment(g, fw.realization, LiftBox{});
  EXPECT_EQ(lift.vertices.size(), 3u);
  EXPECT_EQ(lift.edges.size(), 3u);
}

TEST(Lift, RejectsEmptyAndHugeBoxes) {
  const ColoredGraph g = fixture("gamma4_laman.txt");
  const Framework fw = realize_generic_framework(g, 1);
  EXPECT_THROW(lift_fragment(g, fw.realization, LiftBox{1, 0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(lift_fragment(g, fw.realization, LiftBox{0, 1000, 0, 1000}), std::invalid_argument);
}

TEST(Svg, OneCirclePerLiftVertex) {
  const ColoredGraph g = fixture("gamma4_laman.txt");
  const Framework fw = realize_generic_framework(g, 1);
  const LiftFragment lift = lift_fragment(g, fw.realization, LiftBox{0, 1, 0, 1});
  const std::string svg = render_svg(lift);
  std::size_t circles = 0, lines = 0;
  for (std::size_t p = svg.find("<circle"); p != std::string::npos; p = svg.find("<circle", p + 1)) ++circles;
  for (std::size_t p = svg.find("<line"); p != std::string::npos; p = svg.find("<line", p + 1)) ++lines;
  EXPECT_EQ(circles, lift.vertices.size());
  EXPECT_EQ(lines, lift.edges.size());
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
}

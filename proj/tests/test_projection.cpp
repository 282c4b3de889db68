#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <optional>
#include <random>

#include "crysrig/direction_network.hpp"
#include "crysrig/projection.hpp"
#include "crysrig/sparsity.hpp"

using namespace crysrig;

namespace {

Point2 unit(std::mt19937_64& rng) {
  const double a = std::uniform_real_distribution<double>(0, 2 * std::numbers::pi)(rng);
  return {std::cos(a), std::sin(a)};
}

bool parallel(Point2 a, Point2 b, double tol = 1e-9) { return std::abs(cross(a, b)) <= tol * norm(a) * norm(b); }

// Whether p lies on the line through the origin in direction R^j d for some j.
bool on_some_rotated_line(Point2 p, Point2 d, int k) {
  if (norm(p) < 1e-12) return true;
  for (int j = 0; j < k; ++j) {
    if (parallel(p, PlanarRotation{k, j}.apply(d), 1e-7)) return true;
  }
  return false;
}

// Connected cone graph: a cycle through every vertex plus pendant leaves.
ColoredGraph cycle_with_leaves(int k, int cycle, int leaves, std::mt19937_64& rng) {
  ColoredGraph g(GroupContext::cone(k), cycle + leaves);
  std::uniform_int_distribution<int> rot(0, k - 1);
  for (int i = 0; i < cycle; ++i) g.add_edge(i, (i + 1) % cycle, GroupElement::rotation(rot(rng)));
  for (int i = 0; i < leaves; ++i) {
    const int at = std::uniform_int_distribution<int>(0, cycle + i - 1)(rng);
    if (rng() & 1) {
      g.add_edge(cycle + i, at, GroupElement::rotation(rot(rng)));
    } else {
      g.add_edge(at, cycle + i, GroupElement::rotation(rot(rng)));
    }
  }
  return g;
}

std::vector<Vec2<Real>> as_real(const std::vector<Point2>& ps) {
  std::vector<Vec2<Real>> out;
  for (Point2 p : ps) out.push_back({p.x, p.y});
  return out;
}

}  // namespace

TEST(Rotation, QuarterTurnsAreExact) {
  const Point2 v{0.3, -1.7};
  const Point2 q = PlanarRotation{4, 1}.apply(v);
  EXPECT_EQ(q.x, 1.7);
  EXPECT_EQ(q.y, 0.3);
  const Point2 back = PlanarRotation{4, 1}.apply_inverse(q);
  EXPECT_EQ(back.x, v.x);
  EXPECT_EQ(back.y, v.y);
}

TEST(Rotation, HalfPowerSquaresToRotation) {
  std::mt19937_64 rng(1);
  for (int k : {3, 6}) {
    for (int r = 1; r < k; ++r) {
      const PlanarRotation rot{k, r};
      const Point2 v = unit(rng);
      const Point2 twice = rot.apply_half(rot.apply_half(v));
      const Point2 once = rot.apply(v);
      EXPECT_NEAR(twice.x, once.x, 1e-12);
      EXPECT_NEAR(twice.y, once.y, 1e-12);
    }
  }
}

TEST(ProjectionFactor, OrderTwoRotationsGiveZero) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const auto f = projection_scale_factor(unit(rng), unit(rng), PlanarRotation{4, 2});
    if (f) {
      EXPECT_EQ(*f, 0.0);
    }
  }
}

TEST(ProjectionFactor, SameLineGivesOne) {
  std::mt19937_64 rng(3);
  for (int k : {3, 4, 6}) {
    const Point2 v = unit(rng);
    const PlanarRotation rot{k, 1};
    const Point2 vs[] = {v};
    const PlanarRotation rots[] = {rot};
    const auto lambda = projection_chain(vs, rots);
    ASSERT_TRUE(lambda.has_value());
    EXPECT_NEAR(*lambda, 1.0, 1e-12);
  }
}

TEST(ProjectionFactor, ParallelDirectionIsUndefined) {
  const PlanarRotation rot{4, 1};
  const Point2 v{1, 0};
  // w along v* makes the projection degenerate.
  EXPECT_FALSE(projection_scale_factor(v, projection_direction(v, rot), rot).has_value());
}

TEST(RotationEquation, SolutionsLieOnPredictedLine) {
  std::mt19937_64 rng(4);
  for (int k : {2, 3, 4, 6}) {
    for (int r = 1; r < k; ++r) {
      const PlanarRotation rot{k, r};
      const Point2 vstar = projection_direction(unit(rng), rot);
      const Point2 p = solve_rotation_equation(2.5 * vstar, rot);
      const Point2 check = rot.apply(p) - p;
      EXPECT_NEAR(check.x, 2.5 * vstar.x, 1e-12);
      EXPECT_NEAR(check.y, 2.5 * vstar.y, 1e-12);
      EXPECT_TRUE(parallel(p, rotation_line(vstar, rot)));
    }
  }
  EXPECT_THROW(solve_rotation_equation({1, 0}, PlanarRotation{3, 0}), std::invalid_argument);
}

TEST(ConeCollapse, DirectionsForceBaseOntoRotatedLines) {
  std::mt19937_64 rng(5);
  int checked = 0, moving = 0;
  for (int k : {2, 3, 4, 6}) {
    for (int i = 0; i < 40; ++i) {
      const int cycle = 1 + static_cast<int>(rng() % 3);
      const ColoredGraph g = cycle_with_leaves(k, cycle, static_cast<int>(rng() % 3), rng);
      const std::vector<int> edges = g.all_edge_ids();
      const int base = static_cast<int>(rng() % cycle);
      const Point2 v = unit(rng);
      std::vector<Point2> d;
      try {
        d = cone11_collapsing_directions(g, edges, base, v);
      } catch (const std::invalid_argument&) {
        continue;  // cycle with trivial rotation image
      }
      ++checked;
      const RealNullspace ns = real_nullspace(build_direction_system<Real>(g, as_real(d)));
      // n edges on n vertices leave at least n free parameters, yet p_b is pinned to one line.
      EXPECT_GE(static_cast<int>(ns.basis.size()), g.vertex_count());
      // Every solution puts p_b on one line, so the basis images span at most that line.
      std::optional<Point2> line;
      for (const auto& x : ns.basis) {
        const Point2 pb{x[2 * base], x[2 * base + 1]};
        if (norm(pb) < 1e-12) continue;
        EXPECT_TRUE(on_some_rotated_line(pb, v, k)) << "k=" << k << " #" << i;
        if (line) {
          EXPECT_TRUE(parallel(pb, *line, 1e-7)) << "k=" << k << " #" << i;
        } else {
          line = pb;
        }
      }
      moving += line ? 1 : 0;
    }
  }
  EXPECT_GT(checked, 50);
  EXPECT_GT(moving, 0);
}

TEST(ConeCollapse, TwoTwoGraphsCollapseCompletely) {
  std::mt19937_64 rng(6);
  int checked = 0;
  for (int k : {3, 4, 6}) {
    const GroupContext ctx = GroupContext::cone(k);
    for (int i = 0; i < 60; ++i) {
      const int n = 1 + static_cast<int>(rng() % 3);
      ColoredGraph g(ctx, n);
      std::uniform_int_distribution<int> vert(0, n - 1), rot(0, k - 1);
      for (int e = 0; e < 2 * n; ++e) g.add_edge(vert(rng), vert(rng), GroupElement::rotation(rot(rng)));
      const SparsityReport rep = decompose_gamma22(g);
      if (!rep.in_class) continue;
      std::vector<Point2> d(static_cast<std::size_t>(g.edge_count()));
      for (const auto& part : *rep.decomposition) {
        const MarkedGraph m = MarkedGraph::build(g, part);
        for (int c = 0; c < m.component_count(); ++c) {
          const std::vector<int> comp(m.component_edges(c).begin(), m.component_edges(c).end());
          int base = -1;
          for (int e : comp) {
            if (!m.in_forest(e)) base = g.edge(e).tail;
          }
          ASSERT_GE(base, 0);
          const auto dc = cone11_collapsing_directions(g, comp, base, unit(rng));
          for (std::size_t j = 0; j < comp.size(); ++j) d[comp[j]] = dc[j];
        }
      }
      ++checked;
      const RealNullspace ns = real_nullspace(build_direction_system<Real>(g, as_real(d)));
      EXPECT_TRUE(ns.basis.empty()) << "k=" << k << " #" << i << " nullity " << ns.basis.size();
    }
  }
  EXPECT_GT(checked, 10);
}

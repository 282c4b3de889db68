#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "crysrig/colored_graph.hpp"

namespace crysrig {

// Floating-point planar geometry for the projection gadgets.
struct Point2 {
  double x = 0;
  double y = 0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline Point2 perp(Point2 a) { return {-a.y, a.x}; }

// Rotation by pi * num / den. Multiples of a quarter turn are exact.
inline Point2 rotate_pi_fraction(Point2 v, int num, int den) {
  if ((2 * num) % den == 0) {
    switch ((((2 * num) / den) % 4 + 4) % 4) {
      case 0: return v;
      case 1: return {-v.y, v.x};
      case 2: return {-v.x, -v.y};
      default: return {v.y, -v.x};
    }
  }
  const double a = std::numbers::pi * num / den;
  const double c = std::cos(a), s = std::sin(a);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

// The rotation R_k^r.
struct PlanarRotation {
  int k = 1;
  int r = 0;

  Point2 apply(Point2 v) const { return rotate_pi_fraction(v, 2 * r, k); }
  Point2 apply_inverse(Point2 v) const { return rotate_pi_fraction(v, -2 * r, k); }
  // The square root R_k^{r/2}, rotation by pi r / k.
  Point2 apply_half(Point2 v) const { return rotate_pi_fraction(v, r, k); }
  Point2 apply_inverse_half(Point2 v) const { return rotate_pi_fraction(v, -r, k); }
  bool is_order_two() const { return (2 * r) % k == 0 && r % k != 0; }
};

// v* = (R^{1/2} v)-perp, the projection direction.
inline Point2 projection_direction(Point2 v, const PlanarRotation& rot) { return perp(rot.apply_half(v)); }

// Scale factor of the projection from the line along v to the line along w
// in direction v*. Undefined (nullopt) when v* is parallel to w.
inline std::optional<double> projection_scale_factor(Point2 v, Point2 w, const PlanarRotation& rot) {
  const Point2 vstar = projection_direction(v, rot);
  const Point2 normal = perp(vstar);
  const double den = dot(w, normal);
  if (std::abs(den) <= 1e-14 * norm(w) * norm(normal)) return std::nullopt;
  return dot(v, normal) / den;
}

// Product of the scale factors around the cycle v_1 -> v_2 -> ... -> v_n -> v_1.
inline std::optional<double> projection_chain(std::span<const Point2> vs, std::span<const PlanarRotation> rots) {
  if (vs.size() != rots.size() || vs.empty()) throw std::invalid_argument("chain needs matching nonempty lists");
  double lambda = 1.0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto f = projection_scale_factor(vs[i], vs[(i + 1) % vs.size()], rots[i]);
    if (!f) return std::nullopt;
    lambda *= *f;
  }
  return lambda;
}

// Direction of the solutions of (R - I) p = lambda v*: R_{pi/2} R^{-1/2} v*.
inline Point2 rotation_line(Point2 vstar, const PlanarRotation& rot) { return perp(rot.apply_inverse_half(vstar)); }

// Solves (R - I) p = rhs for a nontrivial rotation.
inline Point2 solve_rotation_equation(Point2 rhs, const PlanarRotation& rot) {
  const Point2 c0 = rot.apply({1, 0}), c1 = rot.apply({0, 1});
  const double a = c0.x - 1, b = c1.x, c = c0.y, d = c1.y - 1;
  const double det = a * d - b * c;
  if (det == 0) throw std::invalid_argument("rotation is trivial");
  return {(d * rhs.x - b * rhs.y) / det, (a * rhs.y - c * rhs.x) / det};
}

// Directions on a connected cone-(1,1) subgraph (edge subset `edges` of a
// cone graph) such that in every realization the base vertex lies along
// R^j v for some j and the other vertices on lines in directions R^j v*.
// `base` must lie on the subgraph's cycle. Returns one direction per listed
// edge, in the listed order.
inline std::vector<Point2> cone11_collapsing_directions(const ColoredGraph& g, std::span<const int> edges, int base,
                                                        Point2 v) {
  const int k = g.context().k();
  // Spanning tree from the base; the one non-tree edge closes the cycle.
  const MarkedGraph marked = MarkedGraph::build(g, edges);
  int closing = -1;
  for (int e : edges) {
    if (!marked.in_forest(e)) {
      if (closing >= 0) throw std::invalid_argument("subgraph is not a map-graph component");
      closing = e;
    }
  }
  if (closing < 0 || marked.component_count() != 1) throw std::invalid_argument("subgraph is not a connected map-graph");
  // Cycle edges: the closing edge plus the tree paths to its endpoints, minus
  // their common prefix.
  Walk to_tail = marked.tree_path(g.edge(closing).tail);
  Walk to_head = marked.tree_path(g.edge(closing).head);
  std::size_t common = 0;
  while (common < to_tail.size() && common < to_head.size() && to_tail[common] == to_head[common]) ++common;
  std::vector<int> cycle{closing};
  for (std::size_t i = common; i < to_tail.size(); ++i) cycle.push_back(to_tail[i].edge);
  for (std::size_t i = common; i < to_head.size(); ++i) cycle.push_back(to_head[i].edge);
  int cut = -1;
  for (int e : cycle) {
    if (g.edge(e).tail == base || g.edge(e).head == base) {
      cut = e;
      break;
    }
  }
  if (cut < 0) throw std::invalid_argument("base vertex is not on the cycle");

  // Sheets of the lifted spanning tree G - cut, rooted at the base.
  std::vector<int> rest;
  for (int e : edges) {
    if (e != cut) rest.push_back(e);
  }
  std::vector<int> sheet(static_cast<std::size_t>(g.vertex_count()), 0);
  {
    const MarkedGraph tree = MarkedGraph::build(g, rest.empty() ? std::span<const int>() : std::span<const int>(rest));
    for (int x = 0; x < g.vertex_count(); ++x) {
      if (tree.component_of(x) >= 0) sheet[x] = tree.tree_image(x).r;
    }
    // The tree is rooted at its lowest spanned vertex; shift so the base is sheet 0.
    const int shift = tree.component_of(base) >= 0 ? sheet[base] : 0;
    for (int& s : sheet) s = ((s - shift) % k + k) % k;
  }
  const ColoredEdge& c = g.edge(cut);
  const int i = c.tail == base ? c.head : c.tail;
  int gamma;  // rho-image of the cycle read from the base
  int cut_sheet;
  if (c.tail == base) {
    gamma = ((c.color.r - sheet[i]) % k + k) % k;
    cut_sheet = sheet[c.head] - c.color.r;
  } else {
    gamma = ((sheet[i] + c.color.r) % k + k) % k;
    cut_sheet = sheet[c.tail];
  }
  if (gamma == 0) throw std::invalid_argument("cycle has trivial rotation image");
  const Point2 vstar = projection_direction(v, PlanarRotation{k, gamma});

  std::vector<Point2> out;
  for (int e : edges) {
    const int s = e == cut ? cut_sheet : sheet[g.edge(e).tail];
    out.push_back(PlanarRotation{k, s}.apply_inverse(vstar));
  }
  return out;
}

}  // namespace crysrig

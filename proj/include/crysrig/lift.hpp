#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crysrig/direction_network.hpp"

namespace crysrig {

// Translations t with x0 <= t.x <= x1 and y0 <= t.y <= y1, combined with
// every rotation. Cone graphs ignore the box and lift to k sheets.
struct LiftBox {
  int x0 = 0, x1 = 0, y0 = 0, y1 = 0;

  std::int64_t translations() const {
    if (x1 < x0 || y1 < y0) return 0;
    return static_cast<std::int64_t>(x1 - x0 + 1) * (y1 - y0 + 1);
  }
};

struct LiftVertex {
  int vertex = 0;  // fiber
  GroupElement element;
  Vec2<Real> position;
};

struct LiftFragment {
  std::vector<LiftVertex> vertices;
  std::vector<std::pair<int, int>> edges;  // indices into vertices
};

inline constexpr std::int64_t kMaxLiftVertices = 200000;

// The part of the infinite lift over the group elements in the box: vertex
// (i, g) sits at Phi(g) p_i and edge ij joins (i, g) to (j, g * gamma_ij).
inline LiftFragment lift_fragment(const ColoredGraph& g, const Realization<Real>& rz, const LiftBox& box) {
  const GroupContext& ctx = g.context();
  const int k = ctx.k();
  if (static_cast<int>(rz.points.size()) != g.vertex_count()) throw std::invalid_argument("one point per vertex required");
  std::vector<GroupElement> elements;
  if (ctx.is_cone()) {
    for (int r = 0; r < k; ++r) elements.push_back(GroupElement::rotation(r));
  } else {
    const std::int64_t count = box.translations() * k * g.vertex_count();
    if (box.translations() == 0) throw std::invalid_argument("empty lift box");
    if (count > kMaxLiftVertices) {
      throw std::invalid_argument("lift box too large: " + std::to_string(count) + " vertices");
    }
    for (int x = box.x0; x <= box.x1; ++x) {
      for (int y = box.y0; y <= box.y1; ++y) {
        for (int r = 0; r < k; ++r) elements.push_back({IVec2{x, y}, r});
      }
    }
  }
  LiftFragment out;
  std::map<std::pair<int, GroupElement>, int> index;
  for (int i = 0; i < g.vertex_count(); ++i) {
    for (const GroupElement& e : elements) {
      index.emplace(std::pair{i, e}, static_cast<int>(out.vertices.size()));
      out.vertices.push_back({i, e, apply(ctx, e, rz, rz.points[i])});
    }
  }
  for (const ColoredEdge& edge : g.edges()) {
    for (const GroupElement& e : elements) {
      const auto a = index.find({edge.tail, e});
      const auto b = index.find({edge.head, compose(e, edge.color, ctx)});
      if (a != index.end() && b != index.end()) out.edges.emplace_back(a->second, b->second);
    }
  }
  return out;
}

}  // namespace crysrig

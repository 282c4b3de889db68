#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "crysrig/colored_graph.hpp"

namespace crysrig {

// Orientation of a spanning map-graph in which every vertex has out-degree
// exactly one. Colors are ignored; self-loops and parallel pairs count as
// cycles.
struct MapGraphOrientation {
  std::vector<int> out_edge;        // per vertex
  std::vector<int> component;       // per vertex
  std::vector<int> cycle_vertex;    // per component: a vertex on its cycle
};

inline std::optional<MapGraphOrientation> map_graph_decompose(const ColoredGraph& g, std::span<const int> edges) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
  for (int e : edges) {
    incident[g.edge(e).tail].push_back(e);
    if (g.edge(e).head != g.edge(e).tail) incident[g.edge(e).head].push_back(e);
  }
  auto other = [&](int e, int v) { return g.edge(e).tail == v ? g.edge(e).head : g.edge(e).tail; };

  MapGraphOrientation out;
  out.out_edge.assign(static_cast<std::size_t>(n), -1);
  out.component.assign(static_cast<std::size_t>(n), -1);
  // Components and the edge-count test m_i = n_i.
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (out.component[s] >= 0) continue;
    std::vector<int> stack{s};
    out.component[s] = comps;
    int nv = 0;
    std::size_t degree_sum = 0;
    int loops = 0;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++nv;
      degree_sum += incident[v].size();
      for (int e : incident[v]) {
        if (g.edge(e).tail == g.edge(e).head) ++loops;
        const int w = other(e, v);
        if (out.component[w] < 0) {
          out.component[w] = comps;
          stack.push_back(w);
        }
      }
    }
    const auto me = static_cast<int>((degree_sum - static_cast<std::size_t>(loops)) / 2) + loops;
    if (me != nv) return std::nullopt;
    ++comps;
  }

  // Peel degree-one vertices; each points at its last remaining edge.
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(g.edge_count()), false);
  for (int v = 0; v < n; ++v) {
    degree[v] = 0;
    for (int e : incident[v]) degree[v] += g.edge(e).tail == g.edge(e).head ? 2 : 1;
  }
  std::vector<int> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push_back(v);
  }
  std::vector<bool> peeled(static_cast<std::size_t>(n), false);
  while (!leaves.empty()) {
    const int v = leaves.back();
    leaves.pop_back();
    if (peeled[v] || degree[v] != 1) continue;
    for (int e : incident[v]) {
      if (used[e]) continue;
      used[e] = true;
      out.out_edge[v] = e;
      peeled[v] = true;
      degree[v] = 0;
      const int w = other(e, v);
      if (--degree[w] == 1) leaves.push_back(w);
      break;
    }
  }
  // What is left in each component is its cycle; walk it.
  out.cycle_vertex.assign(static_cast<std::size_t>(comps), -1);
  for (int v = 0; v < n; ++v) {
    if (peeled[v] || out.out_edge[v] >= 0) continue;
    out.cycle_vertex[out.component[v]] = v;
    int cur = v;
    while (out.out_edge[cur] < 0) {
      int next_edge = -1;
      for (int e : incident[cur]) {
        if (!used[e]) {
          next_edge = e;
          break;
        }
      }
      if (next_edge < 0) throw std::logic_error("map-graph cycle walk failed");
      used[next_edge] = true;
      out.out_edge[cur] = next_edge;
      cur = other(next_edge, cur);
    }
  }
  return out;
}

inline std::optional<MapGraphOrientation> map_graph_decompose(const ColoredGraph& g) {
  return map_graph_decompose(g, g.all_edge_ids());
}

// Directed graph on the base vertices of a 2-map-graph decomposition (X, Y):
// one node per component of X and of Y, with an arc from the X-component
// containing y's base to y, and symmetrically.
struct OverlapGraph {
  struct Node {
    int side = 0;       // 0 = X, 1 = Y
    int component = 0;
    int vertex = 0;     // base vertex, on the component's cycle
  };
  std::vector<Node> nodes;
  std::vector<int> parent;  // the unique in-neighbour of each node
};

inline OverlapGraph overlap_graph(const MapGraphOrientation& x, const MapGraphOrientation& y) {
  OverlapGraph out;
  const std::array<const MapGraphOrientation*, 2> sides{&x, &y};
  std::array<int, 2> offset{0, static_cast<int>(x.cycle_vertex.size())};
  for (int s = 0; s < 2; ++s) {
    for (std::size_t c = 0; c < sides[s]->cycle_vertex.size(); ++c) {
      out.nodes.push_back({s, static_cast<int>(c), sides[s]->cycle_vertex[c]});
    }
  }
  out.parent.resize(out.nodes.size());
  for (std::size_t i = 0; i < out.nodes.size(); ++i) {
    const auto& node = out.nodes[i];
    const int other = 1 - node.side;
    out.parent[i] = offset[other] + sides[other]->component[node.vertex];
  }
  return out;
}

// Every weakly connected component of a graph with in-degree one everywhere
// contains a directed cycle.
inline bool every_component_has_cycle(const OverlapGraph& o) {
  const std::size_t n = o.nodes.size();
  // Following parents from any node must revisit a node; mark the component
  // of each node by union-find and check one cycle exists per component.
  std::vector<int> uf(n);
  for (std::size_t i = 0; i < n; ++i) uf[i] = static_cast<int>(i);
  auto find = [&](int a) {
    while (uf[a] != a) a = uf[a] = uf[uf[a]];
    return a;
  };
  for (std::size_t i = 0; i < n; ++i) uf[find(static_cast<int>(i))] = find(o.parent[i]);
  std::vector<bool> has_cycle(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> seen_at(n, -1);
    int cur = static_cast<int>(i);
    for (int step = 0; seen_at[cur] < 0; ++step) {
      seen_at[cur] = step;
      cur = o.parent[cur];
    }
    has_cycle[find(cur)] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!has_cycle[find(static_cast<int>(i))]) return false;
  }
  return true;
}

}  // namespace crysrig

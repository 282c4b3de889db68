#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "crysrig/group.hpp"

namespace crysrig {

struct ColoredEdge {
  int tail = 0;
  int head = 0;
  GroupElement color;

  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
  friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

// Finite directed multigraph with a group element on every edge. Vertices are
// 0..n-1; edge ids are insertion positions.
class ColoredGraph {
 public:
  ColoredGraph(GroupContext ctx, int vertices) : ctx_(ctx), n_(vertices) {
    if (vertices < 0) throw std::invalid_argument("negative vertex count");
  }

  int add_edge(int tail, int head, const GroupElement& color) {
    if (tail < 0 || tail >= n_ || head < 0 || head >= n_) {
      throw std::out_of_range("edge endpoint out of range");
    }
    if (!is_valid(color, ctx_)) throw std::invalid_argument("edge color not valid for " + ctx_.name());
    edges_.push_back({tail, head, color});
    return static_cast<int>(edges_.size()) - 1;
  }
  int add_edge(const ColoredEdge& e) { return add_edge(e.tail, e.head, e.color); }

  const GroupContext& context() const { return ctx_; }
  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const ColoredEdge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }
  std::span<const ColoredEdge> edges() const { return edges_; }

  // Same vertex set, the listed edges renumbered in the given order.
  ColoredGraph edge_subgraph(std::span<const int> ids) const {
    ColoredGraph out(ctx_, n_);
    out.edges_.reserve(ids.size());
    for (int id : ids) out.edges_.push_back(edge(id));
    return out;
  }

  std::vector<int> all_edge_ids() const {
    std::vector<int> ids(edges_.size());
    std::iota(ids.begin(), ids.end(), 0);
    return ids;
  }

 private:
  GroupContext ctx_;
  int n_;
  std::vector<ColoredEdge> edges_;
};

// The same edge traversed the other way.
inline ColoredEdge reversed(const ColoredEdge& e, const GroupContext& ctx) {
  return {e.head, e.tail, inverse(e.color, ctx)};
}

// Image under Gamma_k -> Z/kZ: drops translation parts, giving a cone graph.
inline ColoredGraph project_to_cone(const ColoredGraph& g) {
  ColoredGraph out(GroupContext::cone(g.context().k()), g.vertex_count());
  for (const ColoredEdge& e : g.edges()) out.add_edge(e.tail, e.head, GroupElement::rotation(e.color.r));
  return out;
}

// ---------------------------------------------------------------------------
// Walks and rho
// ---------------------------------------------------------------------------

struct Step {
  int edge = 0;
  bool forward = true;
  friend bool operator==(const Step&, const Step&) = default;
};
using Walk = std::vector<Step>;

inline int step_start(const Step& s, const ColoredGraph& g) { return s.forward ? g.edge(s.edge).tail : g.edge(s.edge).head; }
inline int step_end(const Step& s, const ColoredGraph& g) { return s.forward ? g.edge(s.edge).head : g.edge(s.edge).tail; }

// Product of the colors along the walk, inverted on backward steps.
inline GroupElement rho(std::span<const Step> walk, const ColoredGraph& g) {
  const GroupContext& ctx = g.context();
  GroupElement acc;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (i > 0 && step_start(walk[i], g) != step_end(walk[i - 1], g)) {
      throw std::invalid_argument("walk is not contiguous at step " + std::to_string(i));
    }
    const GroupElement& c = g.edge(walk[i].edge).color;
    acc = compose(acc, walk[i].forward ? c : inverse(c, ctx), ctx);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Marked graphs
// ---------------------------------------------------------------------------

// A colored graph (or an edge subset of one) with a spanning forest and a base
// vertex per connected component. The referenced graph must outlive it.
class MarkedGraph {
 public:
  // Whole graph, every vertex included; breadth-first forest from the lowest
  // numbered vertex of each component.
  static MarkedGraph build(const ColoredGraph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    return build_impl(g, g.all_edge_ids(), order, nullptr);
  }

  // Edge subset; only the spanned vertices take part.
  static MarkedGraph build(const ColoredGraph& g, std::span<const int> edges) {
    std::vector<bool> spanned(static_cast<std::size_t>(g.vertex_count()), false);
    for (int id : edges) {
      spanned[g.edge(id).tail] = true;
      spanned[g.edge(id).head] = true;
    }
    std::vector<int> order;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (spanned[v]) order.push_back(v);
    }
    return build_impl(g, {edges.begin(), edges.end()}, order, nullptr);
  }

  // Random bases and a random spanning forest.
  static MarkedGraph build_random(const ColoredGraph& g, std::mt19937_64& rng) {
    std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    return build_impl(g, g.all_edge_ids(), order, &rng);
  }

  const ColoredGraph& graph() const { return *graph_; }
  std::span<const int> edges() const { return edges_; }
  int component_count() const { return static_cast<int>(bases_.size()); }
  int component_of(int v) const { return component_.at(static_cast<std::size_t>(v)); }
  int base(int c) const { return bases_.at(static_cast<std::size_t>(c)); }
  std::span<const int> component_vertices(int c) const { return comp_vertices_.at(static_cast<std::size_t>(c)); }
  std::span<const int> component_edges(int c) const { return comp_edges_.at(static_cast<std::size_t>(c)); }
  bool in_forest(int e) const { return in_forest_.at(static_cast<std::size_t>(e)); }

  // rho of the forest path from the base of v's component to v.
  const GroupElement& tree_image(int v) const { return eta_.at(static_cast<std::size_t>(v)); }

  Walk tree_path(int v) const {
    Walk path;
    for (int x = v; parent_edge_[x] >= 0;) {
      const int e = parent_edge_[x];
      const bool fwd = parent_forward_[x];
      path.push_back({e, fwd});
      x = fwd ? graph_->edge(e).tail : graph_->edge(e).head;
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  // rho of the fundamental closed path of a non-forest edge.
  GroupElement fundamental_image(int e) const {
    const GroupContext& ctx = graph_->context();
    const ColoredEdge& edge = graph_->edge(e);
    return compose(compose(tree_image(edge.tail), edge.color, ctx), inverse(tree_image(edge.head), ctx), ctx);
  }

 private:
  static MarkedGraph build_impl(const ColoredGraph& g, std::vector<int> edges, const std::vector<int>& order,
                                std::mt19937_64* rng) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    const GroupContext& ctx = g.context();
    MarkedGraph m;
    m.graph_ = &g;
    m.edges_ = std::move(edges);
    m.component_.assign(n, -1);
    m.parent_edge_.assign(n, -1);
    m.parent_forward_.assign(n, false);
    m.eta_.assign(n, GroupElement{});
    m.in_forest_.assign(static_cast<std::size_t>(g.edge_count()), false);

    std::vector<std::vector<Step>> adj(n);
    for (int id : m.edges_) {
      adj[g.edge(id).tail].push_back({id, true});
      adj[g.edge(id).head].push_back({id, false});
    }
    if (rng) {
      for (auto& a : adj) std::shuffle(a.begin(), a.end(), *rng);
    }

    std::vector<int> queue;
    for (int root : order) {
      if (m.component_[root] >= 0) continue;
      const int c = static_cast<int>(m.bases_.size());
      m.bases_.push_back(root);
      m.comp_vertices_.emplace_back();
      m.component_[root] = c;
      queue.assign(1, root);
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const int u = queue[qi];
        m.comp_vertices_[c].push_back(u);
        for (const Step& s : adj[u]) {
          const int w = step_end(s, g);
          if (m.component_[w] >= 0) continue;
          m.component_[w] = c;
          m.parent_edge_[w] = s.edge;
          m.parent_forward_[w] = s.forward;
          const GroupElement& col = g.edge(s.edge).color;
          m.eta_[w] = compose(m.eta_[u], s.forward ? col : inverse(col, ctx), ctx);
          m.in_forest_[s.edge] = true;
          queue.push_back(w);
        }
      }
      std::sort(m.comp_vertices_[c].begin(), m.comp_vertices_[c].end());
    }
    m.comp_edges_.resize(m.bases_.size());
    for (int id : m.edges_) m.comp_edges_[m.component_[g.edge(id).tail]].push_back(id);
    return m;
  }

  const ColoredGraph* graph_ = nullptr;
  std::vector<int> edges_;
  std::vector<int> component_;
  std::vector<int> bases_;
  std::vector<std::vector<int>> comp_vertices_;
  std::vector<std::vector<int>> comp_edges_;
  std::vector<int> parent_edge_;
  std::vector<bool> parent_forward_;
  std::vector<GroupElement> eta_;
  std::vector<bool> in_forest_;
};

// Tree path to the tail, the edge, and the tree path back from the head.
inline Walk fundamental_closed_path(int e, const MarkedGraph& m) {
  if (m.in_forest(e)) throw std::invalid_argument("edge " + std::to_string(e) + " is in the spanning forest");
  const ColoredEdge& edge = m.graph().edge(e);
  if (m.component_of(edge.tail) < 0) throw std::invalid_argument("edge is not part of the marked subgraph");
  Walk path = m.tree_path(edge.tail);
  path.push_back({e, true});
  Walk back = m.tree_path(edge.head);
  for (auto it = back.rbegin(); it != back.rend(); ++it) path.push_back({it->edge, !it->forward});
  return path;
}

// rho(pi_1) of one component, generated by the fundamental closed paths.
inline SubgroupDescriptor component_subgroup(const MarkedGraph& m, int component) {
  std::vector<GroupElement> gens;
  for (int e : m.component_edges(component)) {
    if (!m.in_forest(e)) gens.push_back(m.fundamental_image(e));
  }
  return subgroup_from_generators(gens, m.graph().context());
}

struct ComponentInvariants {
  std::vector<int> vertices;
  std::vector<int> edges;
  SubgroupDescriptor subgroup;
  int t = 2;
  int cent = 3;
};

struct GraphInvariants {
  int vertices = 0;
  int edges = 0;
  std::vector<ComponentInvariants> components;
  Lattice lattice;  // join of the component translation lattices
  int rep = 0;
  int teich = 0;

  int t_sum() const {
    int s = 0;
    for (const auto& c : components) s += c.t;
    return s;
  }
  int cent_sum() const {
    int s = 0;
    for (const auto& c : components) s += c.cent;
    return s;
  }
};

inline GraphInvariants invariants_of(const MarkedGraph& m) {
  const GroupContext& ctx = m.graph().context();
  GraphInvariants out;
  out.edges = static_cast<int>(m.edges().size());
  for (int c = 0; c < m.component_count(); ++c) {
    ComponentInvariants ci;
    ci.vertices.assign(m.component_vertices(c).begin(), m.component_vertices(c).end());
    ci.edges.assign(m.component_edges(c).begin(), m.component_edges(c).end());
    ci.subgroup = component_subgroup(m, c);
    ci.t = t_dim(ci.subgroup);
    ci.cent = cent_dim(ci.subgroup);
    out.vertices += static_cast<int>(ci.vertices.size());
    out.lattice = lattice_join(out.lattice, ci.subgroup.lattice);
    out.components.push_back(std::move(ci));
  }
  out.rep = rep_dim(out.lattice, ctx);
  out.teich = teich_dim(out.lattice, ctx);
  return out;
}

// Invariants of the whole graph, isolated vertices included.
inline GraphInvariants graph_invariants(const ColoredGraph& g) { return invariants_of(MarkedGraph::build(g)); }

// Invariants of the subgraph formed by an edge subset and its spanned vertices.
inline GraphInvariants graph_invariants(const ColoredGraph& g, std::span<const int> edges) {
  return invariants_of(MarkedGraph::build(g, edges));
}

}  // namespace crysrig

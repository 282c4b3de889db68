#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "crysrig/colored_graph.hpp"
#include "crysrig/group_matroid.hpp"

namespace crysrig {

struct SparsityValues {
  int f = 0;
  int g = 0;
  int h = 0;
  int h_prime = 0;
};

inline SparsityValues sparsity_values(const GraphInvariants& inv) {
  SparsityValues out;
  out.f = 2 * inv.vertices + inv.rep - inv.t_sum();
  out.g = out.f / 2;
  out.h = out.f - 1;
  out.h_prime = 2 * inv.vertices + inv.teich - inv.cent_sum();
  return out;
}

// Whole graph, isolated vertices included.
inline SparsityValues sparsity_values(const ColoredGraph& g) { return sparsity_values(graph_invariants(g)); }

// Subgraph on an edge subset and its spanned vertices.
inline SparsityValues sparsity_values(const ColoredGraph& g, std::span<const int> edges) {
  return sparsity_values(graph_invariants(g, edges));
}

// ---------------------------------------------------------------------------
// Gamma-(1,1) matroid
// ---------------------------------------------------------------------------

// Independence oracle for the Gamma-(1,1) matroid on the edges of a colored
// graph (for cone graphs this is the cone-(1,1) matroid). The rank of an edge
// set is g = n - c + g1(A(G)), where A(G) collects the rho-images of the
// fundamental closed paths with one copy per component.
class OneOneMatroid {
 public:
  explicit OneOneMatroid(const ColoredGraph& g) : g_(&g) {}

  const ColoredGraph& graph() const { return *g_; }

  // Edge set prepared for repeated single-edge extension queries.
  struct Prepared {
    MarkedGraph marked;
    SubsetState state;
  };

  Prepared prepare(std::span<const int> edges) const {
    MarkedGraph m = MarkedGraph::build(*g_, edges);
    std::vector<GroundElement> elems;
    for (int e : edges) {
      if (!m.in_forest(e)) elems.push_back({m.fundamental_image(e), m.component_of(g_->edge(e).tail)});
    }
    const int copies = std::max(1, m.component_count());
    SubsetState s = SubsetState::from_elements(copies, g_->context(), elems);
    return {std::move(m), std::move(s)};
  }

  int rank(std::span<const int> edges) const {
    Prepared p = prepare(edges);
    int n = 0;
    for (int c = 0; c < p.marked.component_count(); ++c) n += static_cast<int>(p.marked.component_vertices(c).size());
    // g1 counts `copies` copies; empty copies contribute 0 net, so n - c + g1
    // computed over c copies equals the count over n copies.
    const int c = p.marked.component_count();
    return n - c + (c == 0 ? 0 : g1_rank(p.state));
  }

  bool independent(std::span<const int> edges) const { return rank(edges) == static_cast<int>(edges.size()); }

  // For independent `base` (prepared), whether base + e stays independent.
  bool can_add(const Prepared& p, std::span<const int> base, int e) const {
    const ColoredEdge& edge = g_->edge(e);
    const int ct = p.marked.component_of(edge.tail);
    const int ch = p.marked.component_of(edge.head);
    if (edge.tail != edge.head && (ct < 0 || ch < 0)) return true;  // attaches a new vertex
    if (ct >= 0 && ct == ch) {
      const GroupContext& ctx = g_->context();
      GroupElement gamma = compose(compose(p.marked.tree_image(edge.tail), edge.color, ctx),
                                   inverse(p.marked.tree_image(edge.head), ctx), ctx);
      return extends_independent(p.state, gamma, ct);
    }
    std::vector<int> with(base.begin(), base.end());
    with.push_back(e);
    return independent(with);
  }

 private:
  const ColoredGraph* g_;
};

inline bool gamma11_independent(const ColoredGraph& g, std::span<const int> edges) {
  return OneOneMatroid(g).independent(edges);
}
inline bool gamma11_independent(const ColoredGraph& g) { return gamma11_independent(g, g.all_edge_ids()); }

// Partition of a growing edge set into two independent sets of the (1,1)
// matroid, maintained by shortest augmenting paths (matroid union).
class MatroidPartition {
 public:
  explicit MatroidPartition(const ColoredGraph& g)
      : matroid_(g), owner_(static_cast<std::size_t>(g.edge_count()), -1) {}

  const std::vector<int>& part(int i) const { return parts_.at(static_cast<std::size_t>(i)); }
  std::size_t size() const { return parts_[0].size() + parts_[1].size(); }
  bool holds(int e) const { return owner_.at(static_cast<std::size_t>(e)) >= 0; }

  // Elements reached by the last failed insertion. They span a subgraph with
  // more edges than the sum of the two ranks allows.
  const std::vector<int>& blocking_set() const { return blocking_; }

  bool insert(int s) {
    if (holds(s)) throw std::invalid_argument("element already in the partition");
    const std::array<OneOneMatroid::Prepared, 2> prepared{matroid_.prepare(parts_[0]), matroid_.prepare(parts_[1])};
    const std::size_t ground = owner_.size();
    std::vector<bool> visited(ground, false);
    std::vector<std::pair<int, int>> parent(ground, {-1, -1});
    std::vector<int> queue{s};
    visited[s] = true;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int x = queue[qi];
      for (int j = 0; j < 2; ++j) {
        if (owner_[x] == j) continue;
        if (matroid_.can_add(prepared[j], parts_[j], x)) {
          augment(s, x, j, parent);
          return true;
        }
        for (int y : parts_[j]) {
          if (visited[y]) continue;
          std::vector<int> swapped;
          swapped.reserve(parts_[j].size());
          for (int z : parts_[j]) {
            if (z != y) swapped.push_back(z);
          }
          swapped.push_back(x);
          if (matroid_.independent(swapped)) {
            visited[y] = true;
            parent[y] = {x, j};
            queue.push_back(y);
          }
        }
      }
    }
    blocking_.assign(queue.begin(), queue.end());
    std::sort(blocking_.begin(), blocking_.end());
    return false;
  }

 private:
  void augment(int s, int x, int j, const std::vector<std::pair<int, int>>& parent) {
    int cur = x, target = j;
    while (true) {
      if (owner_[cur] >= 0) {
        auto& from = parts_[owner_[cur]];
        from.erase(std::find(from.begin(), from.end(), cur));
      }
      auto& to = parts_[target];
      to.insert(std::upper_bound(to.begin(), to.end(), cur), cur);
      owner_[cur] = target;
      if (cur == s) break;
      const auto [p, jj] = parent[cur];
      cur = p;
      target = jj;
    }
    for (const auto& part : parts_) {
      if (!matroid_.independent(part)) throw std::logic_error("matroid partition produced a dependent part");
    }
  }

  OneOneMatroid matroid_;
  std::array<std::vector<int>, 2> parts_;
  std::vector<int> owner_;
  std::vector<int> blocking_;
};

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

enum class SparsityClass { gamma11, gamma22, gamma_laman, cone11, cone22, cone_laman, gen_cone11, gen_cone22 };

inline std::string class_name(SparsityClass c) {
  switch (c) {
    case SparsityClass::gamma11: return "gamma-(1,1)";
    case SparsityClass::gamma22: return "gamma-(2,2)";
    case SparsityClass::gamma_laman: return "gamma-colored-Laman";
    case SparsityClass::cone11: return "cone-(1,1)";
    case SparsityClass::cone22: return "cone-(2,2)";
    case SparsityClass::cone_laman: return "cone-Laman";
    case SparsityClass::gen_cone11: return "generalized-cone-(1,1)";
    case SparsityClass::gen_cone22: return "generalized-cone-(2,2)";
  }
  return "unknown";
}

inline bool is_cone_class(SparsityClass c) {
  return c == SparsityClass::cone11 || c == SparsityClass::cone22 || c == SparsityClass::cone_laman;
}

struct SparsityReport {
  SparsityClass cls = SparsityClass::gamma_laman;
  bool in_class = false;     // sparse and the edge count matches
  bool sparse = false;       // every nonempty subgraph respects the bound
  int edges = 0;
  int required_edges = 0;
  std::vector<int> witness;  // a subgraph with more edges than the bound, when not sparse
  std::optional<std::array<std::vector<int>, 2>> decomposition;
};

inline SparsityReport is_gamma11(const ColoredGraph& g) {
  SparsityReport rep;
  rep.cls = g.context().is_cone() ? SparsityClass::cone11 : SparsityClass::gamma11;
  rep.edges = g.edge_count();
  rep.required_edges = g.vertex_count() + g.context().full_rep() / 2;
  OneOneMatroid m(g);
  std::vector<int> indep;
  rep.sparse = true;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto p = m.prepare(indep);
    if (m.can_add(p, indep, e)) {
      indep.push_back(e);
      continue;
    }
    // The unique circuit in indep + e.
    rep.sparse = false;
    rep.witness.push_back(e);
    for (int y : indep) {
      std::vector<int> swapped;
      for (int z : indep) {
        if (z != y) swapped.push_back(z);
      }
      swapped.push_back(e);
      if (m.independent(swapped)) rep.witness.push_back(y);
    }
    std::sort(rep.witness.begin(), rep.witness.end());
    break;
  }
  rep.in_class = rep.sparse && rep.edges == rep.required_edges;
  return rep;
}

// Whether the listed edges split into two (1,1)-independent sets.
inline bool partitions(const ColoredGraph& g, std::span<const int> edges) {
  const ColoredGraph sub = g.edge_subgraph(edges);
  MatroidPartition part(sub);
  for (int e = 0; e < sub.edge_count(); ++e) {
    if (!part.insert(e)) return false;
  }
  return true;
}

inline SparsityReport decompose_gamma22(const ColoredGraph& g) {
  SparsityReport rep;
  rep.cls = g.context().is_cone() ? SparsityClass::cone22 : SparsityClass::gamma22;
  rep.edges = g.edge_count();
  rep.required_edges = 2 * g.vertex_count() + g.context().full_rep();
  MatroidPartition part(g);
  rep.sparse = true;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!part.insert(e)) {
      rep.sparse = false;
      // Shrink the failing prefix to an edge-minimal non-sparse subgraph;
      // every proper subgraph of it decomposes, so it exceeds f itself.
      std::vector<int> keep(static_cast<std::size_t>(e + 1));
      std::iota(keep.begin(), keep.end(), 0);
      for (int x = e - 1; x >= 0; --x) {
        std::vector<int> trial;
        for (int y : keep) {
          if (y != x) trial.push_back(y);
        }
        if (!partitions(g, trial)) keep = std::move(trial);
      }
      rep.witness = std::move(keep);
      break;
    }
  }
  if (rep.sparse) rep.decomposition = std::array<std::vector<int>, 2>{part.part(0), part.part(1)};
  rep.in_class = rep.sparse && rep.edges == rep.required_edges;
  return rep;
}

// G with every edge doubled: edge e and its copy e + m.
inline ColoredGraph doubled(const ColoredGraph& g) {
  ColoredGraph out = g;
  for (const ColoredEdge& e : g.edges()) out.add_edge(e);
  return out;
}

// Whether m' <= h(G') for every nonempty edge subset G' (h = f - 1). Uses
// the fact that this holds iff G plus a copy of any one edge is
// Gamma-(2,2)-sparse.
inline bool laman_sparse(const ColoredGraph& g) {
  const int m = g.edge_count();
  ColoredGraph dbl = doubled(g);
  MatroidPartition base(dbl);
  for (int e = 0; e < m; ++e) {
    if (!base.insert(e)) return false;
  }
  for (int e = 0; e < m; ++e) {
    MatroidPartition trial = base;
    if (!trial.insert(e + m)) return false;
  }
  return true;
}

// Greedy maximal Laman-sparse edge set. G + e stays Laman-sparse iff G + e +
// (copy of e) is Gamma-(2,2)-sparse, given G is Laman-sparse.
class LamanSparseBuilder {
 public:
  explicit LamanSparseBuilder(const ColoredGraph& ground)
      : m_(ground.edge_count()), doubled_(doubled(ground)), partition_(doubled_) {}

  LamanSparseBuilder(const LamanSparseBuilder&) = delete;
  LamanSparseBuilder& operator=(const LamanSparseBuilder&) = delete;

  bool try_add(int e) {
    MatroidPartition trial = partition_;
    if (!trial.insert(e)) return false;
    MatroidPartition with_copy = trial;
    if (!with_copy.insert(e + m_)) return false;
    partition_ = std::move(trial);
    edges_.push_back(e);
    return true;
  }

  const std::vector<int>& edges() const { return edges_; }

 private:
  int m_;
  ColoredGraph doubled_;
  MatroidPartition partition_;
  std::vector<int> edges_;
};

// Size of a maximal Laman-sparse edge subset.
inline int laman_rank(const ColoredGraph& g) {
  LamanSparseBuilder b(g);
  for (int e = 0; e < g.edge_count(); ++e) b.try_add(e);
  return static_cast<int>(b.edges().size());
}

// An edge-minimal subgraph that is not Laman-sparse, or none. Edges are
// deleted greedily in descending id order while non-sparsity persists.
inline std::optional<std::vector<int>> find_laman_circuit(const ColoredGraph& g) {
  if (laman_sparse(g)) return std::nullopt;
  std::vector<int> keep = g.all_edge_ids();
  for (int e = g.edge_count() - 1; e >= 0; --e) {
    std::vector<int> trial;
    for (int x : keep) {
      if (x != e) trial.push_back(x);
    }
    if (!laman_sparse(g.edge_subgraph(trial))) keep = std::move(trial);
  }
  return keep;
}

inline SparsityReport is_gamma_laman(const ColoredGraph& g) {
  SparsityReport rep;
  rep.cls = g.context().is_cone() ? SparsityClass::cone_laman : SparsityClass::gamma_laman;
  rep.edges = g.edge_count();
  rep.required_edges = 2 * g.vertex_count() + g.context().full_rep() - 1;
  rep.sparse = laman_sparse(g);
  if (!rep.sparse) rep.witness = *find_laman_circuit(g);
  rep.in_class = rep.sparse && rep.edges == rep.required_edges;
  return rep;
}

// Literal form of the doubling criterion: every single-edge doubling is
// Gamma-(2,2) (count included).
inline bool every_doubling_gamma22(const ColoredGraph& g) {
  for (int e = 0; e < g.edge_count(); ++e) {
    ColoredGraph plus = g;
    plus.add_edge(g.edge(e));
    if (!decompose_gamma22(plus).in_class) return false;
  }
  return g.edge_count() > 0;
}

// ---------------------------------------------------------------------------
// Cone and generalized cone classes
// ---------------------------------------------------------------------------

// cone-(1,1), cone-(2,2) and cone-Laman share the crystallographic machinery
// with rep = 0.
inline SparsityReport cone_class(const ColoredGraph& g, SparsityClass cls) {
  if (!g.context().is_cone()) throw std::invalid_argument("cone classes need a cone graph");
  switch (cls) {
    case SparsityClass::cone11: return is_gamma11(g);
    case SparsityClass::cone22: return decompose_gamma22(g);
    case SparsityClass::cone_laman: return is_gamma_laman(g);
    default: throw std::invalid_argument(class_name(cls) + " is not a cone class");
  }
}

// Generalized cone classes only see rotation classes of rho-images, so they
// are the cone classes of the projected graph.
inline SparsityReport generalized_cone_check(const ColoredGraph& g, SparsityClass cls) {
  if (g.context().is_cone()) throw std::invalid_argument("generalized cone classes need a crystallographic graph");
  const ColoredGraph projected = project_to_cone(g);
  SparsityReport rep;
  if (cls == SparsityClass::gen_cone11) {
    rep = is_gamma11(projected);
  } else if (cls == SparsityClass::gen_cone22) {
    rep = decompose_gamma22(projected);
  } else {
    throw std::invalid_argument(class_name(cls) + " is not a generalized cone class");
  }
  rep.cls = cls;
  return rep;
}

struct GcBasis {
  std::vector<int> basis;
  std::vector<int> complement;
};

// For a Gamma-(1,1) (resp. Gamma-(2,2)) graph, a spanning generalized
// cone-(1,1) (resp. cone-(2,2)) subgraph chosen greedily in edge-id order.
inline std::optional<GcBasis> gc_basis(const ColoredGraph& g) {
  const ColoredGraph projected = project_to_cone(g);
  GcBasis out;
  if (is_gamma11(g).in_class) {
    OneOneMatroid m(projected);
    for (int e = 0; e < g.edge_count(); ++e) {
      auto p = m.prepare(out.basis);
      (m.can_add(p, out.basis, e) ? out.basis : out.complement).push_back(e);
    }
    if (static_cast<int>(out.basis.size()) != g.vertex_count()) return std::nullopt;
    return out;
  }
  if (decompose_gamma22(g).in_class) {
    MatroidPartition part(projected);
    for (int e = 0; e < g.edge_count(); ++e) (part.insert(e) ? out.basis : out.complement).push_back(e);
    std::sort(out.basis.begin(), out.basis.end());
    if (static_cast<int>(out.basis.size()) != 2 * g.vertex_count()) return std::nullopt;
    return out;
  }
  return std::nullopt;
}

inline SparsityReport check_class(const ColoredGraph& g, SparsityClass cls) {
  const bool cone = g.context().is_cone();
  if (is_cone_class(cls) != cone) {
    throw std::invalid_argument(class_name(cls) + " does not apply to a " + g.context().name() + " graph");
  }
  switch (cls) {
    case SparsityClass::gamma11: return is_gamma11(g);
    case SparsityClass::gamma22: return decompose_gamma22(g);
    case SparsityClass::gamma_laman: return is_gamma_laman(g);
    case SparsityClass::gen_cone11:
    case SparsityClass::gen_cone22: return generalized_cone_check(g, cls);
    default: return cone_class(g, cls);
  }
}

}  // namespace crysrig

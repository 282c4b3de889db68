#pragma once

#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "crysrig/sparsity.hpp"

namespace crysrig {

// Uniform rotation part; translation coordinates uniform in [-coord, coord].
inline GroupElement random_element(const GroupContext& ctx, std::mt19937_64& rng, int coord = 3) {
  std::uniform_int_distribution<int> rot(0, ctx.k() - 1);
  GroupElement g;
  g.r = rot(rng);
  if (!ctx.is_cone()) {
    std::uniform_int_distribution<int> c(-coord, coord);
    g.t = {c(rng), c(rng)};
  }
  return g;
}

// Endpoints uniform over the n vertices (self-loops allowed).
inline ColoredGraph random_colored_graph(const GroupContext& ctx, int n, int m, std::mt19937_64& rng, int coord = 3) {
  if (n < 1) throw std::invalid_argument("random graph needs a vertex");
  ColoredGraph g(ctx, n);
  std::uniform_int_distribution<int> vertex(0, n - 1);
  for (int e = 0; e < m; ++e) {
    const int a = vertex(rng), b = vertex(rng);
    g.add_edge(a, b, random_element(ctx, rng, coord));
  }
  return g;
}

// A (cone-)Laman graph on n vertices: greedy Laman-sparse selection from a
// random edge pool. Returns nullopt if the pool did not reach the count.
inline std::optional<ColoredGraph> random_laman_graph(const GroupContext& ctx, int n, std::mt19937_64& rng,
                                                      int coord = 3, int pool_factor = 4) {
  const int target = 2 * n + ctx.full_rep() - 1;
  const ColoredGraph pool = random_colored_graph(ctx, n, pool_factor * target, rng, coord);
  LamanSparseBuilder builder(pool);
  for (int e = 0; e < pool.edge_count() && static_cast<int>(builder.edges().size()) < target; ++e) builder.try_add(e);
  if (static_cast<int>(builder.edges().size()) < target) return std::nullopt;
  return pool.edge_subgraph(builder.edges());
}

}  // namespace crysrig

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "crysrig/direction_network.hpp"
#include "crysrig/sparsity.hpp"

namespace crysrig {

struct Framework {
  ColoredGraph graph;
  Realization<Real> realization;
  std::vector<double> lengths;
};

template <class F>
struct RigiditySystem {
  LinearSystem<F> system;
  std::vector<int> degenerate_edges;  // collapsed edges give zero rows
};

// Linearized length equations at a realization, in the pinned coordinates
// (points, then variations of v1 / v2). Row e is the direction-network row
// with the edge vector in place of d-perp.
template <class F>
RigiditySystem<F> rigidity_system(const ColoredGraph& g, const Realization<F>& rz) {
  if (static_cast<int>(rz.points.size()) != g.vertex_count()) throw std::invalid_argument("one point per vertex required");
  std::vector<Vec2<F>> normals;
  RigiditySystem<F> out;
  for (int e = 0; e < g.edge_count(); ++e) {
    normals.push_back(edge_vector(g, rz, e));
    if (normals.back().is_zero()) out.degenerate_edges.push_back(e);
  }
  out.system = system_from_normals<F>(g, normals);
  return out;
}

template <class F>
Realization<F> random_realization(const ColoredGraph& g, std::mt19937_64& rng) {
  Realization<F> rz;
  for (int i = 0; i < g.vertex_count(); ++i) rz.points.push_back({F::random(rng), F::random(rng)});
  if (!g.context().is_cone()) {
    rz.v1 = {F::random(rng), F::random(rng)};
    rz.v2 = g.context().k() == 2 ? Vec2<F>{F::random(rng), F::random(rng)} : rotation_power<F>(g.context().k(), 1) * rz.v1;
  }
  return rz;
}

enum class RigidityClass { minimally_rigid, rigid_redundant, flexible };

inline std::string rigidity_name(RigidityClass c) {
  switch (c) {
    case RigidityClass::minimally_rigid: return "minimally rigid";
    case RigidityClass::rigid_redundant: return "rigid (redundant)";
    case RigidityClass::flexible: return "flexible";
  }
  return "?";
}

struct RigidityVerdict {
  RigidityClass combinatorial = RigidityClass::flexible;
  RigidityClass numeric = RigidityClass::flexible;
  bool consistent = false;
  int laman_rank = 0;  // size of a maximal Laman-sparse subgraph
  int rank = 0;        // numeric rigidity rank
  int rows = 0;
  int columns = 0;
  int nullity = 0;
  int trials = 0;
  std::vector<int> witness;                 // a Laman circuit when G is not Laman-sparse
  std::optional<int> direction_route_rank;  // rank at a realization solved from a direction network
};

// Realization of a Laman graph from a random exact direction network: the
// unique solution up to scale, or nullopt if the sample was not generic.
template <class F = ExactField>
std::optional<Realization<F>> realize_from_directions(const ColoredGraph& g, std::mt19937_64& rng) {
  const auto d = random_directions<F>(g, rng);
  const auto result = solve_realizations(g, build_direction_system<F>(g, d), rng);
  if (result.nullity != 1 || !result.faithful) return std::nullopt;
  return unpack_solution<F>(g, result.solution);
}

namespace detail {

inline RigidityVerdict rigidity_verdict(const ColoredGraph& g, std::uint64_t seed, int trials) {
  if (trials < 1) throw std::invalid_argument("at least one trial required");
  RigidityVerdict out;
  const int n = g.vertex_count();
  const int target = 2 * n + g.context().full_rep() - 1;

  out.laman_rank = laman_rank(g);
  const bool sparse = out.laman_rank == g.edge_count();
  if (out.laman_rank == target && n > 0) {
    out.combinatorial = sparse ? RigidityClass::minimally_rigid : RigidityClass::rigid_redundant;
  }
  if (!sparse) out.witness = *find_laman_circuit(g);

  std::mt19937_64 rng(seed);
  out.rows = g.edge_count();
  out.columns = target + 1;
  for (int t = 0; t < trials; ++t) {
    const auto rz = random_realization<ExactField>(g, rng);
    out.rank = std::max(out.rank, rank(rigidity_system(g, rz).system.dense()));
    out.trials = t + 1;
    if (out.rank == std::min(out.rows, target)) break;
  }
  out.nullity = out.columns - out.rank;
  if (out.rank == target && n > 0) {
    out.numeric = out.rows == target ? RigidityClass::minimally_rigid : RigidityClass::rigid_redundant;
  }
  out.consistent = out.numeric == out.combinatorial && out.rank == out.laman_rank;

  if (out.combinatorial == RigidityClass::minimally_rigid) {
    for (int t = 0; t < trials && !out.direction_route_rank; ++t) {
      if (const auto rz = realize_from_directions<ExactField>(g, rng)) {
        out.direction_route_rank = rank(rigidity_system(g, *rz).system.dense());
      }
    }
    out.consistent = out.consistent && out.direction_route_rank == target;
  }
  return out;
}

}  // namespace detail

// Combinatorial verdict from the Laman matroid, numeric verdict from the
// exact rank of the rigidity matrix at random points.
inline RigidityVerdict is_generically_rigid(const ColoredGraph& g, std::uint64_t seed = 1, int trials = 3) {
  if (g.context().is_cone()) throw std::invalid_argument("is_generically_rigid needs a crystallographic graph");
  return detail::rigidity_verdict(g, seed, trials);
}

inline RigidityVerdict cone_rigidity(const ColoredGraph& g, std::uint64_t seed = 1, int trials = 3) {
  if (!g.context().is_cone()) throw std::invalid_argument("cone_rigidity needs a cone graph");
  return detail::rigidity_verdict(g, seed, trials);
}

// Real framework from a random direction network on a (cone-)Laman graph.
// The solution is scaled to unit norm with its largest entry positive.
inline Framework realize_generic_framework(const ColoredGraph& g, std::uint64_t seed, int max_attempts = 8) {
  if (!laman_sparse(g) || g.edge_count() != 2 * g.vertex_count() + g.context().full_rep() - 1) {
    const SparsityClass want = g.context().is_cone() ? SparsityClass::cone_laman : SparsityClass::gamma_laman;
    throw std::invalid_argument("realization needs a " + class_name(want) + " graph");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Vec2<Real>> d;
    while (static_cast<int>(d.size()) < g.edge_count()) {
      const double x = unit(rng), y = unit(rng);
      if (std::hypot(x, y) > 0.1) d.push_back({x, y});
    }
    const RealNullspace ns = real_nullspace(build_direction_system<Real>(g, d));
    if (ns.basis.size() != 1) continue;
    std::vector<double> x = ns.basis[0];
    double big = 0;
    for (double c : x) {
      if (std::abs(c) > std::abs(big)) big = c;
    }
    if (big < 0) {
      for (double& c : x) c = -c;
    }
    std::vector<Real> xr(x.begin(), x.end());
    Framework fw{g, unpack_solution<Real>(g, xr), {}};
    bool faithful = true;
    for (int e = 0; e < g.edge_count(); ++e) {
      const Vec2<Real> ev = edge_vector(g, fw.realization, e);
      const double len = std::hypot(ev.x.value(), ev.y.value());
      if (len < 1e-8) faithful = false;
      fw.lengths.push_back(len);
    }
    if (!g.context().is_cone()) {
      const Realization<Real>& rz = fw.realization;
      const double vn = std::hypot(rz.v1.x.value(), rz.v1.y.value()) + std::hypot(rz.v2.x.value(), rz.v2.y.value());
      if (vn < 1e-8) faithful = false;
    }
    if (faithful) return fw;
  }
  throw std::runtime_error("no generic direction sample after " + std::to_string(max_attempts) + " attempts");
}

}  // namespace crysrig

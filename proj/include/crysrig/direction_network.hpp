#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "crysrig/colored_graph.hpp"
#include "crysrig/field.hpp"
#include "crysrig/geometry.hpp"
#include "crysrig/linalg.hpp"

namespace crysrig {

// Default exact field: F_p(sqrt 3) with p = 2^61 - 1, for every k.
using ExactField = ModPSqrt3;

template <class F>
struct SparseRow {
  std::vector<std::pair<int, F>> entries;
  friend bool operator==(const SparseRow&, const SparseRow&) = default;
};

// Homogeneous linear system, one row per edge. Columns: 2n point coordinates
// (x, y per vertex) followed by the representation coordinates (v1 for
// k = 3, 4, 6; v1, v2 for k = 2; none for cone graphs).
template <class F>
struct LinearSystem {
  int point_columns = 0;
  int representation_columns = 0;
  std::vector<SparseRow<F>> rows;

  int columns() const { return point_columns + representation_columns; }

  Matrix<F> dense() const {
    Matrix<F> m(static_cast<int>(rows.size()), columns());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (const auto& [c, v] : rows[r].entries) m(static_cast<int>(r), c) = v;
    }
    return m;
  }
  std::vector<F> dense_row(std::size_t r) const {
    std::vector<F> out(static_cast<std::size_t>(columns()), F::zero());
    for (const auto& [c, v] : rows[r].entries) out[c] = v;
    return out;
  }
  friend bool operator==(const LinearSystem&, const LinearSystem&) = default;
};

// Row for edge ij with normal n: <Phi(gamma_ij) p_j - p_i, n> = 0 expanded
// in the unknowns. Shared by direction networks (n = d-perp) and the
// rigidity matrix (n = edge vector).
template <class F>
LinearSystem<F> system_from_normals(const ColoredGraph& g, std::span<const Vec2<F>> normals) {
  if (static_cast<int>(normals.size()) != g.edge_count()) throw std::invalid_argument("one normal per edge required");
  const GroupContext& ctx = g.context();
  const int k = ctx.k();
  LinearSystem<F> sys;
  sys.point_columns = 2 * g.vertex_count();
  sys.representation_columns = ctx.full_rep();
  const Mat2<F> rot_t = rotation_power<F>(k, 1).transpose();
  std::vector<F> row(static_cast<std::size_t>(sys.columns()));
  for (int e = 0; e < g.edge_count(); ++e) {
    const ColoredEdge& edge = g.edge(e);
    const Vec2<F>& n = normals[e];
    std::fill(row.begin(), row.end(), F::zero());
    const Vec2<F> on_head = rotation_power<F>(k, edge.color.r).transpose() * n;
    row[2 * edge.head] += on_head.x;
    row[2 * edge.head + 1] += on_head.y;
    row[2 * edge.tail] -= n.x;
    row[2 * edge.tail + 1] -= n.y;
    if (!ctx.is_cone()) {
      const int base = sys.point_columns;
      const F tx = F::from_int(edge.color.t.x), ty = F::from_int(edge.color.t.y);
      if (k == 2) {
        row[base] += tx * n.x;
        row[base + 1] += tx * n.y;
        row[base + 2] += ty * n.x;
        row[base + 3] += ty * n.y;
      } else {
        const Vec2<F> rn = rot_t * n;
        row[base] += tx * n.x + ty * rn.x;
        row[base + 1] += tx * n.y + ty * rn.y;
      }
    }
    SparseRow<F> sparse;
    for (int c = 0; c < sys.columns(); ++c) {
      if (!row[c].is_zero()) sparse.entries.emplace_back(c, row[c]);
    }
    sys.rows.push_back(std::move(sparse));
  }
  return sys;
}

namespace detail {
template <class F>
std::vector<Vec2<F>> normals_of(std::span<const Vec2<F>> directions) {
  std::vector<Vec2<F>> normals;
  normals.reserve(directions.size());
  for (const Vec2<F>& d : directions) {
    if (d.is_zero()) throw std::invalid_argument("zero direction");
    normals.push_back(perp(d));
  }
  return normals;
}
}  // namespace detail

template <class F>
LinearSystem<F> build_cone_system(const ColoredGraph& g, std::span<const Vec2<F>> directions) {
  if (!g.context().is_cone()) throw std::invalid_argument("cone system needs a cone graph");
  return system_from_normals<F>(g, detail::normals_of(directions));
}

// Crystallographic system with the rotation center pinned at the origin.
template <class F>
LinearSystem<F> build_crystal_system(const ColoredGraph& g, std::span<const Vec2<F>> directions) {
  if (g.context().is_cone()) throw std::invalid_argument("crystallographic system needs a crystallographic graph");
  return system_from_normals<F>(g, detail::normals_of(directions));
}

template <class F>
LinearSystem<F> build_direction_system(const ColoredGraph& g, std::span<const Vec2<F>> directions) {
  return g.context().is_cone() ? build_cone_system<F>(g, directions) : build_crystal_system<F>(g, directions);
}

template <class F>
std::vector<Vec2<F>> random_directions(const ColoredGraph& g, std::mt19937_64& rng) {
  std::vector<Vec2<F>> out;
  out.reserve(static_cast<std::size_t>(g.edge_count()));
  while (static_cast<int>(out.size()) < g.edge_count()) {
    Vec2<F> d{F::random(rng), F::random(rng)};
    if (!d.is_zero()) out.push_back(d);
  }
  return out;
}

template <class F>
std::vector<Vec2<F>> random_directions(const ColoredGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_directions<F>(g, rng);
}

struct GenericRankReport {
  int rank = 0;
  int rows = 0;
  int columns = 0;
  int nullity = 0;
  int trials = 0;
  double log2_field_size = 0;
  // log2 of the Schwartz-Zippel bound rows / |F| on the probability that one
  // trial reports a rank below the generic rank (a rank-r minor is a
  // polynomial of degree at most r <= rows in the direction entries).
  double log2_failure_bound = 0;
};

// Maximum rank over `trials` random direction draws; stops early once the
// rank reaches min(rows, columns).
template <class F = ExactField>
GenericRankReport generic_rank(const ColoredGraph& g, std::uint64_t seed, int trials = 3) {
  if (trials < 1) throw std::invalid_argument("at least one trial required");
  std::mt19937_64 rng(seed);
  GenericRankReport rep;
  rep.rows = g.edge_count();
  rep.columns = 2 * g.vertex_count() + g.context().full_rep();
  const int cap = std::min(rep.rows, rep.columns);
  for (int t = 0; t < trials; ++t) {
    const auto d = random_directions<F>(g, rng);
    rep.rank = std::max(rep.rank, rank(build_direction_system<F>(g, d).dense()));
    rep.trials = t + 1;
    if (rep.rank == cap) break;
  }
  rep.nullity = rep.columns - rep.rank;
  rep.log2_field_size = F::kLog2Size;
  rep.log2_failure_bound = std::log2(std::max(1, rep.rows)) - F::kLog2Size;
  return rep;
}

// ---------------------------------------------------------------------------
// Solutions
// ---------------------------------------------------------------------------

template <class F>
Realization<F> unpack_solution(const ColoredGraph& g, std::span<const F> x) {
  const GroupContext& ctx = g.context();
  Realization<F> rz;
  const int n = g.vertex_count();
  for (int i = 0; i < n; ++i) rz.points.push_back({x[2 * i], x[2 * i + 1]});
  if (!ctx.is_cone()) {
    rz.v1 = {x[2 * n], x[2 * n + 1]};
    rz.v2 = ctx.k() == 2 ? Vec2<F>{x[2 * n + 2], x[2 * n + 3]} : rotation_power<F>(ctx.k(), 1) * rz.v1;
  }
  return rz;
}

template <class F>
std::vector<F> pack_solution(const ColoredGraph& g, const Realization<F>& rz) {
  std::vector<F> x;
  for (const auto& p : rz.points) {
    x.push_back(p.x);
    x.push_back(p.y);
  }
  if (!g.context().is_cone()) {
    x.push_back(rz.v1.x);
    x.push_back(rz.v1.y);
    if (g.context().k() == 2) {
      x.push_back(rz.v2.x);
      x.push_back(rz.v2.y);
    }
  }
  return x;
}

// Edge vector Phi(gamma_ij) p_j - p_i.
template <class F>
Vec2<F> edge_vector(const ColoredGraph& g, const Realization<F>& rz, int e) {
  const ColoredEdge& edge = g.edge(e);
  return apply(g.context(), edge.color, rz, rz.points[edge.head]) - rz.points[edge.tail];
}

template <class F>
std::vector<int> collapsed_edges(const ColoredGraph& g, const Realization<F>& rz) {
  std::vector<int> out;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (edge_vector(g, rz, e).is_zero()) out.push_back(e);
  }
  return out;
}

template <class F>
bool satisfies(const LinearSystem<F>& sys, std::span<const F> x) {
  for (const auto& row : sys.rows) {
    F acc = F::zero();
    for (const auto& [c, v] : row.entries) acc += v * x[c];
    if (!acc.is_zero()) return false;
  }
  return true;
}

template <class F>
struct RealizationResult {
  int nullity = 0;
  std::vector<std::vector<F>> basis;
  std::vector<std::vector<int>> collapsed;   // per basis vector
  std::vector<int> always_collapsed;         // collapsed in every solution
  std::vector<F> solution;                   // random combination of the basis
  std::vector<int> solution_collapsed;
  bool faithful = false;
};

template <class F>
RealizationResult<F> solve_realizations(const ColoredGraph& g, const LinearSystem<F>& sys, std::mt19937_64& rng) {
  RealizationResult<F> out;
  out.basis = nullspace(sys.dense());
  out.nullity = static_cast<int>(out.basis.size());
  std::vector<int> hits(static_cast<std::size_t>(g.edge_count()), 0);
  for (const auto& b : out.basis) {
    out.collapsed.push_back(collapsed_edges(g, unpack_solution<F>(g, b)));
    for (int e : out.collapsed.back()) ++hits[e];
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (hits[e] == out.nullity) out.always_collapsed.push_back(e);
  }
  out.solution.assign(static_cast<std::size_t>(sys.columns()), F::zero());
  for (const auto& b : out.basis) {
    const F c = F::random(rng);
    for (std::size_t i = 0; i < b.size(); ++i) out.solution[i] += c * b[i];
  }
  const Realization<F> rz = unpack_solution<F>(g, out.solution);
  out.solution_collapsed = collapsed_edges(g, rz);
  const bool translations_ok = g.context().is_cone() || !rz.v1.is_zero() || !rz.v2.is_zero();
  out.faithful = out.nullity > 0 && out.solution_collapsed.empty() && translations_ok;
  return out;
}

// ---------------------------------------------------------------------------
// Collapsed solutions
// ---------------------------------------------------------------------------

// rep(Lambda(Gamma_k)) - rep(G) + sum_i T(G_i), over all components
// including isolated vertices.
inline int collapsed_space_dim(const ColoredGraph& g) {
  const GraphInvariants inv = graph_invariants(g);
  return g.context().full_rep() - inv.rep + inv.t_sum();
}

// Explicit basis of solutions with every edge collapsed: representations
// trivial on Lambda(G); in each component p_i = Phi(eta_i^-1) p_b, with p_b
// free when the component has no rotation and at the rotation center
// otherwise.
template <class F>
std::vector<std::vector<F>> construct_collapsed_basis(const ColoredGraph& g) {
  const GroupContext& ctx = g.context();
  const int k = ctx.k();
  const MarkedGraph marked = MarkedGraph::build(g);
  const GraphInvariants inv = invariants_of(marked);

  // Representation vectors vanishing on Lambda(G).
  std::vector<std::vector<F>> reps;
  if (!ctx.is_cone()) {
    const Mat2<F> rot = rotation_power<F>(k, 1);
    Matrix<F> constraints(0, ctx.full_rep());
    for (IVec2 b : inv.lattice.basis()) {
      const F bx = F::from_int(b.x), by = F::from_int(b.y);
      if (k == 2) {
        constraints.append_row({bx, F::zero(), by, F::zero()});
        constraints.append_row({F::zero(), bx, F::zero(), by});
      } else {
        constraints.append_row({bx + by * rot.a, by * rot.b});
        constraints.append_row({by * rot.c, bx + by * rot.d});
      }
    }
    reps = nullspace(constraints);
  }

  const int n = g.vertex_count();
  auto place = [&](const Realization<F>& rz, int comp, const Vec2<F>& pb, Realization<F>& out) {
    for (int v : inv.components[comp].vertices) {
      out.points[v] = apply(ctx, inverse(marked.tree_image(v), ctx), rz, pb);
    }
  };

  std::vector<std::vector<F>> basis;
  for (const auto& u : reps) {
    Realization<F> rz;
    rz.points.assign(static_cast<std::size_t>(n), Vec2<F>{});
    rz.v1 = {u[0], u[1]};
    rz.v2 = k == 2 ? Vec2<F>{u[2], u[3]} : rotation_power<F>(k, 1) * rz.v1;
    for (int c = 0; c < static_cast<int>(inv.components.size()); ++c) {
      Vec2<F> pb{};
      if (const auto& rot = inv.components[c].subgroup.rotation) {
        // Center of Phi(rot): (I - R^r) c = V t.
        const Mat2<F> r = rotation_power<F>(k, rot->r);
        const Mat2<F> a{F::one() - r.a, -r.b, -r.c, F::one() - r.d};
        const Vec2<F> rhs = translation_image(rz, rot->t);
        const F det_inv = (a.a * a.d - a.b * a.c).inverse();
        pb = {(a.d * rhs.x - a.b * rhs.y) * det_inv, (a.a * rhs.y - a.c * rhs.x) * det_inv};
      }
      place(rz, c, pb, rz);
    }
    basis.push_back(pack_solution(g, rz));
  }
  for (int c = 0; c < static_cast<int>(inv.components.size()); ++c) {
    if (inv.components[c].t != 2) continue;
    for (int axis = 0; axis < 2; ++axis) {
      Realization<F> rz;
      rz.points.assign(static_cast<std::size_t>(n), Vec2<F>{});
      const Vec2<F> pb = axis == 0 ? Vec2<F>{F::one(), F::zero()} : Vec2<F>{F::zero(), F::one()};
      place(rz, c, pb, rz);
      basis.push_back(pack_solution(g, rz));
    }
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Floating-point path
// ---------------------------------------------------------------------------

inline Eigen::MatrixXd to_eigen(const LinearSystem<Real>& sys) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(sys.rows.size()), sys.columns());
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    for (const auto& [c, v] : sys.rows[r].entries) m(static_cast<Eigen::Index>(r), c) = v.value();
  }
  return m;
}

struct RealNullspace {
  std::vector<std::vector<double>> basis;
  int rank = 0;
};

// Singular values below rel_tol * (largest) count as zero.
inline RealNullspace real_nullspace(const LinearSystem<Real>& sys, double rel_tol = 1e-9) {
  const Eigen::MatrixXd m = to_eigen(sys);
  RealNullspace out;
  const Eigen::Index cols = m.cols();
  if (cols == 0) return out;
  if (m.rows() == 0) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      std::vector<double> e(static_cast<std::size_t>(cols), 0.0);
      e[c] = 1.0;
      out.basis.push_back(std::move(e));
    }
    return out;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cutoff = rel_tol * std::max(1e-300, s(0));
  for (Eigen::Index i = 0; i < s.size(); ++i) out.rank += s(i) > cutoff ? 1 : 0;
  const Eigen::MatrixXd& v = svd.matrixV();
  for (Eigen::Index c = out.rank; c < cols; ++c) {
    std::vector<double> x(static_cast<std::size_t>(cols));
    for (Eigen::Index r = 0; r < cols; ++r) x[r] = v(r, c);
    out.basis.push_back(std::move(x));
  }
  return out;
}

}  // namespace crysrig

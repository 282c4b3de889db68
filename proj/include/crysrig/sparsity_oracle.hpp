#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "crysrig/sparsity.hpp"

namespace crysrig {

enum class Bound { f, g, h, h_prime };

struct OracleResult {
  bool sparse = true;
  int worst_slack = std::numeric_limits<int>::max();  // min over subsets of bound - m'
  std::vector<int> worst_subset;                      // smallest mask attaining it
};

// Evaluates f, g, h and h' on every nonempty edge subset straight from the
// definitions (component subgroups, lattice join, T, cent, teich), without
// the matroid machinery. Results are indexed by Bound.
inline std::array<OracleResult, 4> exhaustive_oracle_all(const ColoredGraph& g, int max_edges = 16) {
  const int m = g.edge_count();
  if (m > max_edges) throw std::length_error("exhaustive oracle limited to " + std::to_string(max_edges) + " edges");
  std::array<OracleResult, 4> out;
  std::vector<int> subset;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
    subset.clear();
    for (int e = 0; e < m; ++e) {
      if (mask & (std::uint32_t{1} << e)) subset.push_back(e);
    }
    const SparsityValues v = sparsity_values(g, subset);
    const std::array<int, 4> values{v.f, v.g, v.h, v.h_prime};
    for (std::size_t b = 0; b < 4; ++b) {
      const int slack = values[b] - static_cast<int>(subset.size());
      if (slack < out[b].worst_slack) {
        out[b].worst_slack = slack;
        out[b].worst_subset = subset;
      }
    }
  }
  for (OracleResult& r : out) {
    if (m == 0) r.worst_slack = 0;
    r.sparse = r.worst_slack >= 0;
  }
  return out;
}

inline OracleResult exhaustive_oracle(const ColoredGraph& g, Bound bound, int max_edges = 16) {
  return exhaustive_oracle_all(g, max_edges)[static_cast<std::size_t>(bound)];
}

}  // namespace crysrig

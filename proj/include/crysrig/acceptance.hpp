#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "crysrig/direction_network.hpp"
#include "crysrig/group_matroid.hpp"
#include "crysrig/projection.hpp"
#include "crysrig/random_graphs.hpp"
#include "crysrig/rigidity.hpp"
#include "crysrig/sparsity.hpp"
#include "crysrig/sparsity_oracle.hpp"
#include "crysrig/subgroup_oracle.hpp"

namespace crysrig {

struct AcceptanceConfig {
  std::uint64_t seed = 1;
  int small_n = 3;     // vertex bound for the exhaustive-oracle criteria
  int max_n = 6;       // vertex bound for realization and rigidity criteria
  int max_m = 10;      // edge bound for the doubling criterion
  int maxwell_m = 12;  // edge bound for subgraph enumeration
  double scale = 1.0;  // multiplies every instance count
  int trials = 3;      // random draws per exact rank
  bool flip_r4 = false;  // fault injection: Gamma_4 composes with the reversed action
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  long instances = 0;
  long violations = 0;
  double seconds = 0;
  std::string detail;                 // counts and bounds, one line
  std::vector<std::string> failures;  // first few violations with reproduction seeds
};

namespace detail {

inline std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t instance_seed(std::uint64_t base, int criterion, int group, long index) {
  std::uint64_t s = splitmix(base);
  s = splitmix(s ^ static_cast<std::uint64_t>(criterion));
  s = splitmix(s ^ static_cast<std::uint64_t>(group));
  return splitmix(s ^ static_cast<std::uint64_t>(index));
}

class Tally {
 public:
  Tally(int id, std::string title) : start_(std::chrono::steady_clock::now()) {
    result_.id = id;
    result_.title = std::move(title);
  }

  void instance() { ++result_.instances; }

  void fail(const std::string& where, std::uint64_t seed, const std::string& what) {
    ++result_.violations;
    if (result_.failures.size() < 8) {
      result_.failures.push_back(where + " seed " + std::to_string(seed) + ": " + what);
    }
  }

  bool check(bool ok, const std::string& where, std::uint64_t seed, const std::string& what) {
    if (!ok) fail(where, seed, what);
    return ok;
  }

  CriterionResult finish(std::string detail) {
    result_.passed = result_.violations == 0 && result_.instances > 0;
    result_.detail = std::move(detail);
    result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(result_);
  }

 private:
  CriterionResult result_;
  std::chrono::steady_clock::time_point start_;
};

inline long scaled(double scale, long count) { return std::max(1L, std::lround(scale * static_cast<double>(count))); }

inline GroupContext faulted(GroupContext ctx, const AcceptanceConfig& cfg) {
  if (cfg.flip_r4 && !ctx.is_cone() && ctx.k() == 4) return ctx.with_reversed_action();
  return ctx;
}

inline std::vector<GroupContext> crystal_groups(const AcceptanceConfig& cfg) {
  std::vector<GroupContext> out;
  for (int k : {2, 3, 4, 6}) out.push_back(faulted(GroupContext::crystallographic(k), cfg));
  return out;
}

inline std::vector<GroupContext> all_groups(const AcceptanceConfig& cfg) {
  std::vector<GroupContext> out = crystal_groups(cfg);
  for (int k : {2, 3, 4, 6}) out.push_back(GroupContext::cone(k));
  return out;
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline bool same_ground(const GroundElement& a, const GroundElement& b) { return a.copy == b.copy && a.gamma == b.gamma; }

// g1 read off bounded closures of each copy's elements.
inline int oracle_g1(int copies, const GroupContext& ctx, std::span<const GroundElement> elements, int box) {
  std::vector<std::vector<GroupElement>> parts(static_cast<std::size_t>(copies));
  for (const GroundElement& e : elements) parts[e.copy].push_back(e.gamma);
  Lattice lattice;
  int t_sum = 0;
  for (const auto& part : parts) {
    BoundedClosure closure(part, ctx, box);
    lattice = lattice_join(lattice, closure.translation_lattice());
    t_sum += closure.has_rotation() ? 0 : 2;
  }
  return copies + rep_dim(lattice, ctx) / 2 - t_sum / 2;
}

inline SubgroupDescriptor translations_of(const SubgroupDescriptor& d) { return {d.lattice, std::nullopt}; }

// The listed edges on their spanned vertices, relabeled in increasing order.
inline ColoredGraph spanned_subgraph(const ColoredGraph& g, std::span<const int> edges) {
  std::vector<int> label(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int e : edges) {
    label[g.edge(e).tail] = 0;
    label[g.edge(e).head] = 0;
  }
  int n = 0;
  for (int& l : label) {
    if (l == 0) l = n++;
  }
  ColoredGraph out(g.context(), n);
  for (int e : edges) out.add_edge(label[g.edge(e).tail], label[g.edge(e).head], g.edge(e).color);
  return out;
}

inline std::string fmt_double(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace detail

// Instances shared between criteria.
struct AcceptanceData {
  std::vector<std::pair<ColoredGraph, std::uint64_t>> tight22;   // criterion 3 -> 5
  std::vector<std::pair<ColoredGraph, std::uint64_t>> doubling;  // criterion 4 -> 11
  std::vector<std::pair<ColoredGraph, std::uint64_t>> laman;     // criterion 6 -> 7
  std::vector<std::pair<ColoredGraph, std::uint64_t>> circuits;  // criterion 6 -> 7
  std::vector<std::pair<ColoredGraph, std::uint64_t>> rigidity;  // criterion 8 -> 9
};

// 1. Rank-function axioms of g1 on random (A subset B, x).
inline CriterionResult criterion_matroid_axioms(const AcceptanceConfig& cfg) {
  detail::Tally t(1, "matroid axioms of g1");
  const long count = detail::scaled(cfg.scale, 10000);
  long oracle_checks = 0;
  const auto groups = detail::crystal_groups(cfg);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const GroupContext& ctx = groups[gi];
    for (long i = 0; i < count; ++i) {
      const std::uint64_t seed = detail::instance_seed(cfg.seed, 1, static_cast<int>(gi), i);
      std::mt19937_64 rng(seed);
      t.instance();
      const int copies = detail::uniform_int(rng, 1, 3);
      std::vector<GroundElement> b_el, a_el;
      const int b_size = detail::uniform_int(rng, 0, 6);
      for (int j = 0; j < b_size; ++j) {
        b_el.push_back({random_element(ctx, rng, 3), detail::uniform_int(rng, 0, copies - 1)});
        if (rng() & 1) a_el.push_back(b_el.back());
      }
      GroundElement x;
      do {
        x = {random_element(ctx, rng, 3), detail::uniform_int(rng, 0, copies - 1)};
      } while (std::any_of(b_el.begin(), b_el.end(), [&](const GroundElement& y) { return detail::same_ground(x, y); }));

      const std::string where = ctx.name() + " #" + std::to_string(i);
      const SubsetState a = SubsetState::from_elements(copies, ctx, a_el);
      const SubsetState b = SubsetState::from_elements(copies, ctx, b_el);
      const int ga = g1_rank(a), gb = g1_rank(b);
      const int gax = g1_rank(a.with(x.gamma, x.copy)), gbx = g1_rank(b.with(x.gamma, x.copy));
      const int da = gax - ga, db = gbx - gb;
      t.check(g1_rank(SubsetState(copies, ctx)) == 0, where, seed, "g1(empty) != 0");
      t.check(ga >= 0 && ga <= static_cast<int>(a_el.size()), where, seed, "g1(A) outside [0, |A|]");
      t.check(ga <= gb, where, seed, "monotonicity: g1(A) > g1(B)");
      t.check(da == 0 || da == 1, where, seed, "increment on A is " + std::to_string(da));
      t.check(db == 0 || db == 1, where, seed, "increment on B is " + std::to_string(db));
      t.check(da >= db, where, seed, "local submodularity violated");
      if (is_independent(a)) {
        t.check(extends_independent(a, x.gamma, x.copy) == (da == 1), where, seed, "incremental test disagrees with g1");
      }
      if (i % 16 == 0) {
        ++oracle_checks;
        t.check(detail::oracle_g1(copies, ctx, a_el, 24) == ga, where, seed, "g1(A) disagrees with closure oracle");
        t.check(detail::oracle_g1(copies, ctx, b_el, 24) == gb, where, seed, "g1(B) disagrees with closure oracle");
      }
    }
  }
  return t.finish(std::to_string(count) + " triples per group, " + std::to_string(oracle_checks) +
                  " cross-checked against bounded closures");
}

// 2. Radical laws and the rep - T increment against bounded closures.
inline CriterionResult criterion_radical(const AcceptanceConfig& cfg) {
  detail::Tally t(2, "radical and subgroup laws");
  const long count = detail::scaled(cfg.scale, 5000);
  constexpr int kBox = 24;  // eight times the generator coordinate bound
  constexpr int kInner = 2;
  long roots = 0, inside = 0;
  const auto groups = detail::crystal_groups(cfg);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const GroupContext& ctx = groups[gi];
    const int k = ctx.k();
    for (long i = 0; i < count; ++i) {
      const std::uint64_t seed = detail::instance_seed(cfg.seed, 2, static_cast<int>(gi), i);
      std::mt19937_64 rng(seed);
      t.instance();
      const std::string where = ctx.name() + " #" + std::to_string(i);
      const bool translations_only = detail::uniform_int(rng, 0, 3) == 0;
      std::vector<GroupElement> gens;
      const int ngens = detail::uniform_int(rng, 1, 3);
      for (int j = 0; j < ngens; ++j) {
        GroupElement g = random_element(ctx, rng, 3);
        if (translations_only) g.r = 0;
        gens.push_back(g);
      }
      const SubgroupDescriptor d = subgroup_from_generators(gens, ctx);
      const SubgroupDescriptor rad = radical(d, ctx);
      const BoundedClosure closure(gens, ctx, kBox);

      // Membership near the origin.
      for (int x = -kInner; x <= kInner; ++x) {
        for (int y = -kInner; y <= kInner; ++y) {
          for (int r = 0; r < k; ++r) {
            const GroupElement g{{x, y}, r};
            if (contains(d, g, ctx) != closure.contains(g)) {
              t.fail(where, seed, "membership of " + std::to_string(x) + "," + std::to_string(y) + "," +
                                      std::to_string(r) + " disagrees with closure");
            }
          }
        }
      }
      // Invariants are preserved and the radical is a closure operator.
      t.check(rep_dim(rad.lattice, ctx) == rep_dim(d.lattice, ctx) && t_dim(rad) == t_dim(d), where, seed,
              "radical changes rep or T");
      t.check(is_subgroup(d, rad, ctx), where, seed, "subgroup not inside its radical");
      t.check(same_subgroup(radical(rad, ctx), rad, ctx), where, seed, "radical not idempotent");
      // Monotone.
      const std::vector<GroupElement> fewer(gens.begin(), gens.end() - 1);
      const SubgroupDescriptor sub = subgroup_from_generators(fewer, ctx);
      t.check(is_subgroup(radical(sub, ctx), rad, ctx), where, seed, "radical not monotone");
      // Roots: if gamma^j is nontrivial and lies in the subgroup, gamma is in the radical.
      const GroupElement gamma = random_element(ctx, rng, 3);
      for (int j = 2; j <= std::max(k, 3); ++j) {
        const GroupElement pw = power(gamma, j, ctx);
        if (pw.is_identity()) break;
        std::vector<GroupElement> with_root = gens;
        with_root.push_back(pw);
        const SubgroupDescriptor dr = subgroup_from_generators(with_root, ctx);
        ++roots;
        t.check(contains(radical(dr, ctx), gamma, ctx), where, seed, "root of a member outside the radical");
      }
      // Conjugation fixes radicals of translation subgroups.
      const SubgroupDescriptor trans = detail::translations_of(d);
      const GroupElement by = random_element(ctx, rng, 3);
      t.check(same_subgroup(radical(conjugate(trans, by, ctx), ctx), radical(trans, ctx), ctx), where, seed,
              "conjugation moves the radical of a translation subgroup");
      // Pushing translations through Lambda.
      std::vector<GroupElement> extra;
      for (int j = detail::uniform_int(rng, 1, 2); j > 0; --j) {
        GroupElement g = random_element(ctx, rng, 3);
        g.r = 0;
        extra.push_back(g);
      }
      const SubgroupDescriptor extra_d = subgroup_from_generators(extra, ctx);
      const SubgroupDescriptor lhs = radical(join(trans, extra_d, ctx), ctx);
      const SubgroupDescriptor rhs = radical(detail::translations_of(join(d, extra_d, ctx)), ctx);
      t.check(same_subgroup(lhs, rhs, ctx), where, seed, "push-translation law fails");
      // rep - T increases by 2 exactly off the radical; half the probes are
      // drawn from the radical itself.
      GroupElement probe = random_element(ctx, rng, 3);
      if (rng() & 1) {
        const auto rg = generators(rad);
        probe = GroupElement{};
        for (int j = detail::uniform_int(rng, 1, 3); j > 0 && !rg.empty(); --j) {
          probe = compose(probe, rg[static_cast<std::size_t>(detail::uniform_int(rng, 0, static_cast<int>(rg.size()) - 1))], ctx);
        }
      }
      if (std::abs(probe.t.x) > 4 || std::abs(probe.t.y) > 4) continue;
      std::vector<GroupElement> more = gens;
      more.push_back(probe);
      const int inc = oracle_rep_minus_t(more, ctx, kBox) - oracle_rep_minus_t(gens, ctx, kBox);
      const bool in_rad = contains(rad, probe, ctx);
      inside += in_rad ? 1 : 0;
      t.check(inc == (in_rad ? 0 : 2), where, seed,
              "rep - T increment " + std::to_string(inc) + (in_rad ? " inside" : " outside") + " the radical");
    }
  }
  return t.finish(std::to_string(count) + " subgroups per group, " + std::to_string(roots) + " root probes, " +
                  std::to_string(inside) + " increment probes inside the radical");
}

// 3. Matroid-union decomposition vs exhaustive f-counts.
inline CriterionResult criterion_decomposition(const AcceptanceConfig& cfg, AcceptanceData& data) {
  detail::Tally t(3, "(2,2) decomposition equivalence");
  const long count = detail::scaled(cfg.scale, 1000);
  long tight = 0;
  const auto groups = detail::all_groups(cfg);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const GroupContext& ctx = groups[gi];
    for (long i = 0; i < count; ++i) {
      const std::uint64_t seed = detail::instance_seed(cfg.seed, 3, static_cast<int>(gi), i);
      std::mt19937_64 rng(seed);
      t.instance();
      const std::string where = ctx.name() + " #" + std::to_string(i);
      const int n = detail::uniform_int(rng, 1, cfg.small_n);
      const int m = 2 * n + ctx.full_rep();
      const ColoredGraph g = random_colored_graph(ctx, n, m, rng, detail::uniform_int(rng, 1, 3));
      const SparsityReport rep = decompose_gamma22(g);
      const OracleResult oracle = exhaustive_oracle(g, Bound::f);
      if (!t.check(rep.in_class == oracle.sparse, where, seed, "matroid union and f-count disagree")) continue;
      if (!rep.in_class) {
        const SparsityValues w = sparsity_values(g, rep.witness);
        t.check(static_cast<int>(rep.witness.size()) > w.f, where, seed, "witness does not exceed f");
        continue;
      }
      ++tight;
      data.tight22.emplace_back(g, seed);
      const auto& parts = *rep.decomposition;
      std::vector<int> all(parts[0]);
      all.insert(all.end(), parts[1].begin(), parts[1].end());
      std::sort(all.begin(), all.end());
      t.check(all == g.all_edge_ids(), where, seed, "decomposition is not a partition");
      for (const auto& part : parts) {
        const ColoredGraph sub = g.edge_subgraph(part);
        const bool ok = static_cast<int>(part.size()) == n + ctx.full_rep() / 2 && exhaustive_oracle(sub, Bound::g).sparse;
        t.check(ok, where, seed, "part is not a spanning (1,1) graph");
      }
    }
  }
  return t.finish(std::to_string(count) + " graphs per group, " + std::to_string(tight) + " decomposable");
}

// 4. Doubling-based Laman decisions vs exhaustive h-counts. Also collects
// the h' verdicts used by criterion 11.
inline CriterionResult criterion_doubling(const AcceptanceConfig& cfg, AcceptanceData& data) {
  detail::Tally t(4, "doubling equivalence for Laman classes");
  const long count = detail::scaled(cfg.scale, 1000);
  long in_class = 0;
  const auto groups = detail::all_groups(cfg);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const GroupContext& ctx = groups[gi];
    for (long i = 0; i < count; ++i) {
      const std::uint64_t seed = detail::instance_seed(cfg.seed, 4, static_cast<int>(gi), i);
      std::mt19937_64 rng(seed);
      const int n = detail::uniform_int(rng, 1, cfg.small_n);
      const int target = 2 * n + ctx.full_rep() - 1;
      const int coord = detail::uniform_int(rng, 1, 3);
      std::optional<ColoredGraph> g;
      switch (i % 3) {
        case 0: g = random_laman_graph(ctx, n, rng, coord); break;
        case 1: g = random_colored_graph(ctx, n, target, rng, coord); break;
        default: g = random_colored_graph(ctx, n, detail::uniform_int(rng, 1, cfg.max_m), rng, coord); break;
      }
      if (!g || g->edge_count() > cfg.max_m) continue;
      t.instance();
      const std::string where = ctx.name() + " #" + std::to_string(i);
      const SparsityReport rep = is_gamma_laman(*g);
      const OracleResult oracle = exhaustive_oracle(*g, Bound::h);
      t.check(rep.sparse == oracle.sparse, where, seed, "doubling and h-count sparsity disagree");
      const bool oracle_class = oracle.sparse && g->edge_count() == target;
      t.check(rep.in_class == oracle_class, where, seed, "doubling and h-count class disagree");
      t.check(every_doubling_gamma22(*g) == rep.in_class, where, seed, "literal doubling test disagrees");
      if (!rep.sparse) {
        const SparsityValues w = sparsity_values(*g, rep.witness);
        t.check(static_cast<int>(rep.witness.size()) > w.h, where, seed, "circuit does not exceed h");
      }
      in_class += rep.in_class ? 1 : 0;
      data.doubling.emplace_back(*g, seed);
    }
  }
  return t.finish(std::to_string(in_class) + " of " + std::to_string(data.doubling.size()) + " graphs in class");
}

// 5. Generic direction-network rank on (2,2) graphs.
inline CriterionResult criterion_collapse(const AcceptanceConfig& cfg, const AcceptanceData& data) {
  detail::Tally t(5, "direction-network collapse");
  double worst_bound = -1e9;
  int max_trials = 0;
  for (const auto& [g, seed] : data.tight22) {
    t.instance();
    const GenericRankReport rep = generic_rank<ExactField>(g, seed, cfg.trials);
    const int want = 2 * g.vertex_count() + g.context().full_rep();
    t.check(rep.rank == want, g.context().name(), seed,
            "rank " + std::to_string(rep.rank) + ", expected " + std::to_string(want));
    worst_bound = std::max(worst_bound, rep.log2_failure_bound);
    max_trials = std::max(max_trials, rep.trials);
  }
  t.check(worst_bound <= -60, "bound", cfg.seed, "per-trial failure bound above 2^-60");
  return t.finish("max trials " + std::to_string(max_trials) + ", per-trial failure bound 2^" +
                  detail::fmt_double(std::round(worst_bound * 10) / 10));
}

// 6. Faithful realizations of Laman graphs; circuits collapse.
inline CriterionResult criterion_faithful(const AcceptanceConfig& cfg, AcceptanceData& data) {
  detail::Tally t(6, "faithful realization");
  const long count = detail::scaled(cfg.scale, 200);
  const auto groups = detail::all_groups(cfg);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const GroupContext& ctx = groups[gi];
    for (long i = 0; i < 2 * count; ++i) {
      const std::uint64_t seed = detail::instance_seed(cfg.seed, 6, static_cast<int>(gi), i);
      std::mt19937_64 rng(seed);
      const std::string where = ctx.name() + " #" + std::to_string(i);
      std::optional<ColoredGraph> g;
      for (int attempt = 0; attempt < 16 && !g; ++attempt) {
        g = random_laman_graph(ctx, detail::uniform_int(rng, 1, cfg.max_n), rng, detail::uniform_int(rng, 1, 3));
      }
      if (!g) {
        t.fail(where, seed, "no Laman graph generated");
        continue;
      }
      t.instance();
      const bool circuit = i >= count;
      if (circuit) {
        const int a = detail::uniform_int(rng, 0, g->vertex_count() - 1);
        const int b = detail::uniform_int(rng, 0, g->vertex_count() - 1);
        g->add_edge(a, b, random_element(ctx, rng, 3));
      }
      const auto dirs = random_directions<ExactField>(*g, rng);
      const auto res = solve_realizations(*g, build_direction_system<ExactField>(*g, dirs), rng);
      if (!circuit) {
        t.check(res.nullity == 1, where, seed, "nullity " + std::to_string(res.nullity));
        t.check(res.faithful, where, seed, "extracted solution not faithful");
        data.laman.emplace_back(*g, seed);
      } else {
        t.check(!res.always_collapsed.empty() && !res.solution_collapsed.empty(), where, seed,
                "a solution without collapsed edges exists");
        data.circuits.emplace_back(*g, seed);
      }
    }
  }
  return t.finish(std::to_string(data.laman.size()) + " Laman graphs, " + std::to_string(data.circuits.size()) +
                  " graphs with a circuit");
}

// 7. Collapsed-solution bases.
inline CriterionResult criterion_collapsed_dimension(const AcceptanceConfig& cfg, const AcceptanceData& data) {
  detail::Tally t(7, "collapsed-dimension formula");
  long circuits = 0;
  auto check_basis = [&](const ColoredGraph& g, std::uint64_t seed, const std::string& where) {
    std::mt19937_64 rng(seed ^ 0x7777);
    const auto basis = construct_collapsed_basis<ExactField>(g);
    const int dim = collapsed_space_dim(g);
    t.check(static_cast<int>(basis.size()) == dim, where, seed,
            "basis size " + std::to_string(basis.size()) + ", formula " + std::to_string(dim));
    Matrix<ExactField> m(0, 2 * g.vertex_count() + g.context().full_rep());
    for (const auto& b : basis) m.append_row(b);
    t.check(rank(m) == static_cast<int>(basis.size()), where, seed, "basis vectors dependent");
    for (int draw = 0; draw < 2; ++draw) {
      const auto sys = build_direction_system<ExactField>(g, random_directions<ExactField>(g, rng));
      for (const auto& b : basis) {
        t.check(satisfies<ExactField>(sys, b), where, seed, "collapsed vector violates a direction system");
      }
    }
  };
  for (const auto& [g, seed] : data.laman) {
    t.instance();
    check_basis(g, seed, g.context().name() + " Laman");
  }
  for (const auto& [g, seed] : data.circuits) {
    t.instance();
    check_basis(g, seed, g.context().name() + " with circuit");
    const auto circuit = find_laman_circuit(g);
    if (!t.check(circuit.has_value(), g.context().name(), seed, "no circuit found")) continue;
    const ColoredGraph c = detail::spanned_subgraph(g, *circuit);
    check_basis(c, seed, g.context().name() + " circuit");
    const GenericRankReport rep = generic_rank<ExactField>(c, seed, cfg.trials);
    ++circuits;
    t.check(rep.nullity == collapsed_space_dim(c), g.context().name() + " circuit", seed,
            "nullity " + std::to_string(rep.nullity) + ", formula " + std::to_string(collapsed_space_dim(c)));
  }
  return t.finish(std::to_string(data.laman.size() + data.circuits.size()) + " graphs, " + std::to_string(circuits) +
                  " circuit nullities compared");
}

// 8. Combinatorial vs numeric rigidity.
inline CriterionResult criterion_rigidity(const AcceptanceConfig& cfg, AcceptanceData& data) {
  detail::Tally t(8, "rigidity equivalence");
  const long count = detail::scaled(cfg.scale, 200);
  std::array<long, 3> classes{};
  const auto groups = detail::all_groups(cfg);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const GroupContext& ctx = groups[gi];
    for (long i = 0; i < count; ++i) {
      const std::uint64_t seed = detail::instance_seed(cfg.seed, 8, static_cast<int>(gi), i);
      std::mt19937_64 rng(seed);
      const std::string where = ctx.name() + " #" + std::to_string(i);
      const int n = detail::uniform_int(rng, 1, cfg.max_n);
      const int coord = detail::uniform_int(rng, 1, 3);
      std::optional<ColoredGraph> g;
      if (i % 4 != 3) g = random_laman_graph(ctx, n, rng, coord);
      if (g && i % 4 == 1) {
        // Extra edges on a Laman graph give the redundant class.
        const int extra = detail::uniform_int(rng, 1, 3);
        const ColoredGraph more = random_colored_graph(ctx, n, extra, rng, coord);
        for (int e = 0; e < extra; ++e) g->add_edge(more.edge(e).tail, more.edge(e).head, more.edge(e).color);
      }
      if (!g) g = random_colored_graph(ctx, n, 2 * n + ctx.full_rep() - 1, rng, coord);
      t.instance();
      const RigidityVerdict v = ctx.is_cone() ? cone_rigidity(*g, seed, cfg.trials) : is_generically_rigid(*g, seed, cfg.trials);
      ++classes[static_cast<std::size_t>(v.combinatorial)];
      t.check(v.consistent, where, seed,
              "combinatorial " + rigidity_name(v.combinatorial) + ", numeric " + rigidity_name(v.numeric) +
                  " (rank " + std::to_string(v.rank) + ", Laman rank " + std::to_string(v.laman_rank) + ")");
      if (v.combinatorial == RigidityClass::minimally_rigid) {
        t.check(v.nullity == 1, where, seed, "minimally rigid with nullity " + std::to_string(v.nullity));
      }
      data.rigidity.emplace_back(*g, seed);
    }
  }
  return t.finish(std::to_string(classes[0]) + " minimally rigid, " + std::to_string(classes[1]) + " redundant, " +
                  std::to_string(classes[2]) + " flexible");
}

// 9. Maxwell bound on every subgraph. Identity loops give zero rows at every
// realization, so subgraphs are enumerated over the remaining edges.
inline CriterionResult criterion_maxwell(const AcceptanceConfig& cfg, const AcceptanceData& data) {
  detail::Tally t(9, "Maxwell bound on subgraphs");
  long subgraphs = 0;
  for (const auto& [g, seed] : data.rigidity) {
    if (g.edge_count() > cfg.maxwell_m) continue;
    t.instance();
    std::mt19937_64 rng(seed ^ 0x9999);
    const auto sys = rigidity_system(g, random_realization<ExactField>(g, rng)).system;
    std::vector<int> live;
    for (int e = 0; e < g.edge_count(); ++e) {
      const ColoredEdge& edge = g.edge(e);
      if (!(edge.tail == edge.head && edge.color.is_identity())) live.push_back(e);
    }
    std::vector<int> subset;
    std::function<void(std::size_t, const RowSpace<ExactField>&)> visit = [&](std::size_t pos,
                                                                             const RowSpace<ExactField>& space) {
      if (pos == live.size()) {
        if (subset.empty()) return;
        ++subgraphs;
        const int h = sparsity_values(g, subset).h;
        if (space.rank() > h) {
          std::string ids;
          for (int e : subset) ids += " " + std::to_string(e);
          t.fail(g.context().name(), seed, "rank " + std::to_string(space.rank()) + " > h " + std::to_string(h) + " on" + ids);
        }
        return;
      }
      visit(pos + 1, space);
      RowSpace<ExactField> with = space;
      with.insert(sys.dense_row(static_cast<std::size_t>(live[pos])));
      subset.push_back(live[pos]);
      visit(pos + 1, with);
      subset.pop_back();
    };
    visit(0, RowSpace<ExactField>(sys.columns()));
  }
  return t.finish(std::to_string(subgraphs) + " subgraphs checked");
}

// 10. Projection gadgets.
inline CriterionResult criterion_projection(const AcceptanceConfig& cfg) {
  detail::Tally t(10, "projection gadgets");
  const long count = detail::scaled(cfg.scale, 1000);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  auto unit = [&](std::mt19937_64& rng) {
    const double a = angle(rng);
    return Point2{std::cos(a), std::sin(a)};
  };
  double closest = 1e9, worst_line = 0;
  for (int k : {2, 3, 4, 6}) {
    for (long i = 0; i < count; ++i) {
      const std::uint64_t seed = detail::instance_seed(cfg.seed, 10, k, i);
      std::mt19937_64 rng(seed);
      const std::string where = "k=" + std::to_string(k) + " #" + std::to_string(i);
      t.instance();
      // Order-two rotations project to zero.
      if (k % 2 == 0) {
        const PlanarRotation half_turn{k, k / 2};
        const Point2 v = unit(rng), w = unit(rng);
        const auto lambda = projection_scale_factor(v, w, half_turn);
        if (lambda) t.check(*lambda == 0.0, where, seed, "order-two factor " + detail::fmt_double(*lambda));
      }
      // Chains of length >= 2 with rotations of order > 2 scale by lambda != 1.
      if (k != 2) {
        const int len = detail::uniform_int(rng, 2, 5);
        std::vector<Point2> vs;
        std::vector<PlanarRotation> rots;
        for (int j = 0; j < len; ++j) {
          vs.push_back(unit(rng));
          int r;
          do {
            r = detail::uniform_int(rng, 1, k - 1);
          } while (2 * r == k);
          rots.push_back({k, r});
        }
        const auto lambda = projection_chain(vs, rots);
        if (t.check(lambda.has_value(), where, seed, "undefined projection in random chain")) {
          closest = std::min(closest, std::abs(*lambda - 1));
          t.check(std::abs(*lambda - 1) > 1e-9, where, seed, "chain factor equals 1");
        }
      }
      // Solutions of (R - I) p = lambda v* lie on the predicted line.
      const PlanarRotation rot{k, detail::uniform_int(rng, 1, k - 1)};
      const Point2 vstar = projection_direction(unit(rng), rot);
      const double lambda = std::uniform_real_distribution<double>(-5, 5)(rng);
      const Point2 p = solve_rotation_equation(lambda * vstar, rot);
      const Point2 line = rotation_line(vstar, rot);
      const double rel = std::abs(cross(p, line)) / std::max(1e-300, norm(p) * norm(line));
      worst_line = std::max(worst_line, rel);
      t.check(rel <= 1e-12, where, seed, "off the rotation line by " + detail::fmt_double(rel));
    }
  }
  return t.finish("min |lambda - 1| = " + detail::fmt_double(closest) + ", max line deviation " +
                  detail::fmt_double(worst_line));
}

// 11. h and h' decide the same Laman class.
inline CriterionResult criterion_h_prime(const AcceptanceConfig& cfg, const AcceptanceData& data) {
  detail::Tally t(11, "h vs h' class agreement");
  (void)cfg;
  long members = 0, sparse_only = 0;
  for (const auto& [g, seed] : data.doubling) {
    t.instance();
    const GroupContext& ctx = g.context();
    const auto oracle = exhaustive_oracle_all(g);
    const SubgroupDescriptor whole{ctx.is_cone() ? Lattice{} : Lattice::full(), GroupElement::rotation(1)};
    const int n = g.vertex_count();
    const bool by_h = oracle[static_cast<std::size_t>(Bound::h)].sparse && g.edge_count() == 2 * n + ctx.full_rep() - 1;
    const bool by_h_prime = oracle[static_cast<std::size_t>(Bound::h_prime)].sparse &&
                            g.edge_count() == 2 * n + teich_dim(whole.lattice, ctx) - cent_dim(whole);
    t.check(by_h == by_h_prime, ctx.name(), seed, std::string("h says ") + (by_h ? "in" : "out") + ", h' says " +
                                                      (by_h_prime ? "in" : "out"));
    members += by_h ? 1 : 0;
    sparse_only += oracle[static_cast<std::size_t>(Bound::h)].sparse != oracle[static_cast<std::size_t>(Bound::h_prime)].sparse;
  }
  return t.finish(std::to_string(members) + " class members; " + std::to_string(sparse_only) +
                  " graphs where the sparsity verdicts alone differ");
}

inline std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg,
                                                   const std::function<void(const CriterionResult&)>& progress = {}) {
  AcceptanceData data;
  std::vector<CriterionResult> out;
  auto record = [&](CriterionResult r) {
    if (progress) progress(r);
    out.push_back(std::move(r));
  };
  record(criterion_matroid_axioms(cfg));
  record(criterion_radical(cfg));
  record(criterion_decomposition(cfg, data));
  record(criterion_doubling(cfg, data));
  record(criterion_collapse(cfg, data));
  record(criterion_faithful(cfg, data));
  record(criterion_collapsed_dimension(cfg, data));
  record(criterion_rigidity(cfg, data));
  record(criterion_maxwell(cfg, data));
  record(criterion_projection(cfg));
  record(criterion_h_prime(cfg, data));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

inline std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.title << "): " << r.instances
     << " instances, " << r.violations << " violations, " << std::round(r.seconds * 100) / 100 << " s; " << r.detail;
  for (const auto& f : r.failures) os << "\n    " << f;
  return os.str();
}

}  // namespace crysrig

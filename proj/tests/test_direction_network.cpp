#include <gtest/gtest.h>

#include <random>

#include "crysrig/direction_network.hpp"
#include "crysrig/random_graphs.hpp"

using namespace crysrig;

namespace {

ColoredGraph loops(const GroupContext& ctx, std::initializer_list<GroupElement> colors) {
  ColoredGraph g(ctx, 1);
  for (const GroupElement& c : colors) g.add_edge(0, 0, c);
  return g;
}

}  // namespace

TEST(GenericRank, ConeLoops) {
  const GroupContext c3 = GroupContext::cone(3);
  const GenericRankReport one = generic_rank(loops(c3, {GroupElement::rotation(1)}), 1);
  EXPECT_EQ(one.rank, 1);
  EXPECT_EQ(one.columns, 2);
  EXPECT_EQ(generic_rank(loops(c3, {GroupElement::rotation(1), GroupElement::rotation(2)}), 1).rank, 2);
  // The identity loop gives a zero row.
  EXPECT_EQ(generic_rank(loops(c3, {GroupElement::identity()}), 1).rank, 0);
}

TEST(GenericRank, Gamma4TwoTwoLoopsHaveFullRank) {
  const GroupContext g4 = GroupContext::crystallographic(4);
  const ColoredGraph g = loops(g4, {GroupElement::rotation(1), {{0, 1}, 1}, GroupElement::translation(1, 0),
                                    GroupElement::translation(0, 1)});
  const GenericRankReport rep = generic_rank(g, 5);
  EXPECT_EQ(rep.columns, 4);
  EXPECT_EQ(rep.rank, 4);
  EXPECT_EQ(rep.nullity, 0);
  EXPECT_LT(rep.log2_failure_bound, -100);
}

TEST(GenericRank, IsSeedDeterministic) {
  std::mt19937_64 rng(3);
  const ColoredGraph g = random_colored_graph(GroupContext::crystallographic(6), 3, 7, rng);
  const GenericRankReport a = generic_rank(g, 42), b = generic_rank(g, 42);
  EXPECT_EQ(a.rank, b.rank);
  EXPECT_EQ(a.trials, b.trials);
}

TEST(DirectionSystem, RejectsZeroDirections) {
  const ColoredGraph g = loops(GroupContext::cone(3), {GroupElement::rotation(1)});
  const std::vector<Vec2<ExactField>> d{{}};
  EXPECT_THROW(build_direction_system<ExactField>(g, d), std::invalid_argument);
}

// A solution built by hand satisfies the system built from its own edge directions.
TEST(DirectionSystem, RealizationSatisfiesItsOwnDirections) {
  std::mt19937_64 rng(19);
  for (int k : {2, 3, 4, 6}) {
    for (const GroupContext& ctx : {GroupContext::crystallographic(k), GroupContext::cone(k)}) {
      const ColoredGraph g = random_colored_graph(ctx, 3, 6, rng);
      Realization<ExactField> rz;
      for (int i = 0; i < 3; ++i) rz.points.push_back({ExactField::random(rng), ExactField::random(rng)});
      if (!ctx.is_cone()) {
        rz.v1 = {ExactField::random(rng), ExactField::random(rng)};
        rz.v2 = k == 2 ? Vec2<ExactField>{ExactField::random(rng), ExactField::random(rng)}
                       : rotation_power<ExactField>(k, 1) * rz.v1;
      }
      std::vector<Vec2<ExactField>> d;
      for (int e = 0; e < g.edge_count(); ++e) {
        const Vec2<ExactField> ev = edge_vector(g, rz, e);
        d.push_back(ev.is_zero() ? Vec2<ExactField>{ExactField::one(), ExactField::zero()} : ev);
      }
      const auto sys = build_direction_system<ExactField>(g, d);
      const std::vector<ExactField> x = pack_solution(g, rz);
      EXPECT_TRUE(satisfies(sys, std::span<const ExactField>(x))) << ctx.name();
    }
  }
}

TEST(Collapsed, IdentityComponentInGamma2) {
  const ColoredGraph g = loops(GroupContext::crystallographic(2), {GroupElement::identity()});
  EXPECT_EQ(collapsed_space_dim(g), 6);
  const auto basis = construct_collapsed_basis<ExactField>(g);
  EXPECT_EQ(basis.size(), 6u);
}

TEST(Collapsed, BasisSolvesEverySystemAndIsIndependent) {
  std::mt19937_64 rng(23);
  for (int k : {2, 3, 4, 6}) {
    for (const GroupContext& ctx : {GroupContext::crystallographic(k), GroupContext::cone(k)}) {
      for (int i = 0; i < 15; ++i) {
        const ColoredGraph g = random_colored_graph(ctx, 1 + static_cast<int>(rng() % 3), static_cast<int>(rng() % 5), rng);
        const auto basis = construct_collapsed_basis<ExactField>(g);
        EXPECT_EQ(static_cast<int>(basis.size()), collapsed_space_dim(g)) << ctx.name();
        const auto sys = build_direction_system<ExactField>(g, random_directions<ExactField>(g, rng));
        Matrix<ExactField> stacked(0, sys.columns());
        for (const auto& b : basis) {
          EXPECT_TRUE(satisfies(sys, std::span<const ExactField>(b)));
          EXPECT_TRUE(collapsed_edges(g, unpack_solution<ExactField>(g, b)).size() == static_cast<std::size_t>(g.edge_count()));
          stacked.append_row(b);
        }
        EXPECT_EQ(rank(stacked), static_cast<int>(basis.size()));
      }
    }
  }
}

TEST(Realizations, LamanLoopsHaveOneDimensionalSolutions) {
  const GroupContext g4 = GroupContext::crystallographic(4);
  const ColoredGraph g = loops(g4, {GroupElement::rotation(1), {{0, 1}, 1}, GroupElement::translation(1, 0)});
  std::mt19937_64 rng(1);
  const auto res = solve_realizations(g, build_direction_system<ExactField>(g, random_directions<ExactField>(g, rng)), rng);
  EXPECT_EQ(res.nullity, 1);
  EXPECT_TRUE(res.faithful);
}

TEST(Realizations, RealNullspaceMatchesExactNullity) {
  std::mt19937_64 rng(29);
  const GroupContext g3 = GroupContext::crystallographic(3);
  for (int i = 0; i < 20; ++i) {
    const ColoredGraph g = random_colored_graph(g3, 2, 4, rng);
    std::vector<Vec2<Real>> d;
    std::uniform_real_distribution<double> u(-1, 1);
    for (int e = 0; e < g.edge_count(); ++e) d.push_back({u(rng) + 2.0, u(rng)});
    const auto sys = build_direction_system<Real>(g, d);
    const RealNullspace ns = real_nullspace(sys);
    const GenericRankReport exact = generic_rank(g, 7);
    EXPECT_EQ(static_cast<int>(ns.basis.size()), exact.nullity);
  }
}

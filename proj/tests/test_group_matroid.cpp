#include <gtest/gtest.h>

#include <random>

#include "crysrig/group_matroid.hpp"
#include "crysrig/random_graphs.hpp"

using namespace crysrig;

namespace {

const GroupContext kG4 = GroupContext::crystallographic(4);

SubsetState one_copy(std::initializer_list<GroupElement> els, const GroupContext& ctx = kG4) {
  std::vector<GroundElement> ground;
  for (const GroupElement& g : els) ground.push_back({g, 0});
  return SubsetState::from_elements(1, ctx, ground);
}

}  // namespace

TEST(G1Rank, FrozenGamma4Examples) {
  const GroupElement r = GroupElement::rotation(1);
  const GroupElement t1 = GroupElement::translation(1, 0), t2 = GroupElement::translation(0, 1);
  EXPECT_EQ(g1_rank(one_copy({})), 0);
  EXPECT_EQ(g1_rank(one_copy({GroupElement::identity()})), 0);
  EXPECT_EQ(g1_rank(one_copy({r})), 1);
  EXPECT_EQ(g1_rank(one_copy({t1})), 1);
  EXPECT_EQ(g1_rank(one_copy({t1, t2})), 1);
  EXPECT_EQ(g1_rank(one_copy({r, t1})), 2);
  EXPECT_EQ(g1_rank(one_copy({r, t1, t2})), 2);
  EXPECT_TRUE(is_tight(one_copy({r, t1})));
  EXPECT_FALSE(is_independent(one_copy({t1, t2})));
  EXPECT_TRUE(is_spanning(one_copy({r, t1, t2})));
}

TEST(G1Rank, Gamma2CountsBothTranslationDirections) {
  const GroupContext g2 = GroupContext::crystallographic(2);
  const GroupElement t1 = GroupElement::translation(1, 0), t2 = GroupElement::translation(0, 1);
  EXPECT_EQ(g1_rank(one_copy({t1}, g2)), 1);
  EXPECT_EQ(g1_rank(one_copy({t1, t2}, g2)), 2);
  EXPECT_EQ(g1_rank(one_copy({GroupElement::rotation(1), t1, t2}, g2)), 3);
}

TEST(G1Rank, ConeCountsRotationsOnly) {
  const GroupContext c3 = GroupContext::cone(3);
  EXPECT_EQ(g1_rank(one_copy({GroupElement::identity()}, c3)), 0);
  EXPECT_EQ(g1_rank(one_copy({GroupElement::rotation(1)}, c3)), 1);
  EXPECT_EQ(g1_rank(one_copy({GroupElement::rotation(1), GroupElement::rotation(2)}, c3)), 1);
}

TEST(G1Rank, SeparateCopiesShareTheLattice) {
  const GroupElement t1 = GroupElement::translation(1, 0), t2 = GroupElement::translation(0, 1);
  // Two copies, each a single translation: the lattices join into Z^2 once.
  const SubsetState s = SubsetState::from_elements(2, kG4, std::vector<GroundElement>{{t1, 0}, {t2, 1}});
  EXPECT_EQ(g1_rank(s), 2 + 1 - 2);
}

TEST(G1Rank, SubmodularAndUnitIncrease) {
  std::mt19937_64 rng(21);
  for (int k : {2, 3, 4, 6}) {
    const GroupContext ctx = GroupContext::crystallographic(k);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<GroundElement> b, a;
      for (int i = 0; i < 4; ++i) {
        b.push_back({random_element(ctx, rng, 2), static_cast<int>(rng() % 2)});
        if (rng() & 1) a.push_back(b.back());
      }
      const GroundElement x{random_element(ctx, rng, 2), static_cast<int>(rng() % 2)};
      const SubsetState sa = SubsetState::from_elements(2, ctx, a), sb = SubsetState::from_elements(2, ctx, b);
      const int da = g1_rank(sa.with(x.gamma, x.copy)) - g1_rank(sa);
      const int db = g1_rank(sb.with(x.gamma, x.copy)) - g1_rank(sb);
      EXPECT_TRUE(da == 0 || da == 1);
      EXPECT_GE(da, db);
      EXPECT_LE(g1_rank(sa), g1_rank(sb));
      EXPECT_LE(g1_rank(sb), static_cast<int>(sb.size()));
      if (is_independent(sa)) {
        EXPECT_EQ(extends_independent(sa, x.gamma, x.copy), da == 1);
      }
    }
  }
}

TEST(Transforms, ConjugationPreservesRank) {
  std::mt19937_64 rng(4);
  for (int k : {2, 3, 4, 6}) {
    const GroupContext ctx = GroupContext::crystallographic(k);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<GroundElement> els;
      for (int i = 0; i < 4; ++i) els.push_back({random_element(ctx, rng, 2), static_cast<int>(rng() % 2)});
      const SubsetState a = SubsetState::from_elements(2, ctx, els);
      const SubsetState c = transform(a, Conjugation{{random_element(ctx, rng), random_element(ctx, rng)}});
      EXPECT_EQ(g1_rank(c), g1_rank(a));
      EXPECT_EQ(c.size(), a.size());
    }
  }
}

TEST(Transforms, SeparateThenFuseRestoresRank) {
  const GroupElement r = GroupElement::rotation(1), t1 = GroupElement::translation(1, 0);
  const SubsetState a = SubsetState::from_elements(2, kG4, std::vector<GroundElement>{{r, 0}, {t1, 0}});
  const SubsetState s = transform(a, Separation{0, 1, {1}});
  EXPECT_EQ(s.part(0).size(), 1u);
  EXPECT_EQ(s.part(1).size(), 1u);
  EXPECT_EQ(s.part(1)[0], t1);
  // {r} | {t1}: 2 + 1 - 1 = 2, same as {r, t1} in one copy.
  EXPECT_EQ(g1_rank(s), 2);
  const SubsetState f = transform(s, Fusion{0, 1});
  EXPECT_EQ(g1_rank(f), g1_rank(a));
  EXPECT_TRUE(f.part(1).empty());
}

TEST(Transforms, RejectMalformedRequests) {
  const SubsetState a = SubsetState::from_elements(2, kG4, std::vector<GroundElement>{{GroupElement::rotation(1), 0}});
  EXPECT_THROW(separate(a, 0, 0, std::vector<std::size_t>{0}), std::invalid_argument);
  EXPECT_THROW(fuse(a, 0, 1), std::invalid_argument);
  EXPECT_THROW(conjugate_parts(a, std::vector<GroupElement>{}), std::invalid_argument);
}

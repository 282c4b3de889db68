#include <gtest/gtest.h>

#include <random>

#include "crysrig/group.hpp"
#include "crysrig/subgroup_oracle.hpp"

using namespace crysrig;

namespace {

GroupElement el(std::int64_t x, std::int64_t y, int r) { return {{x, y}, r}; }

GroupElement random_el(const GroupContext& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3), rot(0, ctx.k() - 1);
  return ctx.is_cone() ? GroupElement::rotation(rot(rng)) : el(c(rng), c(rng), rot(rng));
}

}  // namespace

TEST(GroupContext, GeneratorHasOrderK) {
  for (int k : {2, 3, 4, 6}) {
    const GroupContext ctx = GroupContext::crystallographic(k);
    EXPECT_EQ(ctx.action().det(), 1);
    IMat2 acc = ctx.action();
    for (int i = 1; i < k; ++i) {
      EXPECT_FALSE(acc.a == 1 && acc.b == 0 && acc.c == 0 && acc.d == 1) << "k=" << k << " power " << i;
      acc = acc * ctx.action();
    }
    EXPECT_TRUE(acc.a == 1 && acc.b == 0 && acc.c == 0 && acc.d == 1);
  }
}

TEST(GroupContext, FullRepresentationDimension) {
  EXPECT_EQ(GroupContext::crystallographic(2).full_rep(), 4);
  for (int k : {3, 4, 6}) EXPECT_EQ(GroupContext::crystallographic(k).full_rep(), 2);
  for (int k : {2, 3, 4, 6}) EXPECT_EQ(GroupContext::cone(k).full_rep(), 0);
}

TEST(GroupContext, RejectsUnsupportedOrders) {
  EXPECT_THROW(GroupContext::crystallographic(5), std::invalid_argument);
  EXPECT_THROW(GroupContext::cone(1), std::invalid_argument);
}

TEST(GroupOps, AssociativityAndInverses) {
  std::mt19937_64 rng(5);
  for (int k : {2, 3, 4, 6}) {
    for (const GroupContext& ctx : {GroupContext::crystallographic(k), GroupContext::cone(k)}) {
      for (int i = 0; i < 100; ++i) {
        const GroupElement a = random_el(ctx, rng), b = random_el(ctx, rng), c = random_el(ctx, rng);
        EXPECT_EQ(compose(compose(a, b, ctx), c, ctx), compose(a, compose(b, c, ctx), ctx));
        EXPECT_TRUE(compose(a, inverse(a, ctx), ctx).is_identity());
        EXPECT_EQ(power(a, 3, ctx), compose(a, compose(a, a, ctx), ctx));
        EXPECT_EQ(power(a, -1, ctx), inverse(a, ctx));
      }
    }
  }
}

TEST(GroupOps, RotationActsOnTranslations) {
  const GroupContext ctx = GroupContext::crystallographic(4);
  // r t r^-1 is the rotated translation.
  const GroupElement conj = conjugate(GroupElement::rotation(1), GroupElement::translation(1, 0), ctx);
  EXPECT_EQ(conj, GroupElement::translation(0, 1));
  EXPECT_EQ(power(GroupElement::rotation(1), 4, ctx), GroupElement::identity());
}

TEST(Lattice, HermiteNormalFormSpan) {
  const Lattice l = Lattice::span({IVec2{2, 4}, IVec2{4, 2}});
  EXPECT_EQ(l.rank(), 2);
  EXPECT_TRUE(l.contains(IVec2{6, 6}));
  EXPECT_TRUE(l.contains(IVec2{2, -2}));
  EXPECT_FALSE(l.contains(IVec2{1, 1}));
  EXPECT_FALSE(l.contains(IVec2{2, 0}));
  EXPECT_EQ(Lattice::span({IVec2{2, 4}, IVec2{1, 2}}).rank(), 1);
  EXPECT_TRUE(Lattice::span({IVec2{0, 0}}).is_trivial());
}

TEST(Lattice, SaturationAndJoin) {
  const Lattice sat = lattice_saturate(Lattice::span({IVec2{2, 4}}));
  EXPECT_TRUE(sat.contains(IVec2{1, 2}));
  EXPECT_EQ(sat.rank(), 1);
  const Lattice j = lattice_join(Lattice::span({IVec2{2, 0}}), Lattice::span({IVec2{0, 3}}));
  EXPECT_TRUE(j.contains(IVec2{2, 3}));
  EXPECT_FALSE(j.contains(IVec2{1, 0}));
  EXPECT_TRUE(lattice_saturate(j).contains(Lattice::full()));
}

TEST(Subgroup, MixedGeneratorsGiveFullRadical) {
  const GroupContext ctx = GroupContext::crystallographic(4);
  const SubgroupDescriptor d = subgroup_from_generators({GroupElement::rotation(1), GroupElement::translation(3, 0)}, ctx);
  ASSERT_TRUE(d.has_rotation());
  EXPECT_TRUE(contains(d, GroupElement::translation(0, 3), ctx));
  EXPECT_FALSE(contains(d, GroupElement::translation(1, 0), ctx));
  const SubgroupDescriptor rad = radical(d, ctx);
  EXPECT_TRUE(contains(rad, GroupElement::translation(1, 0), ctx));
  EXPECT_TRUE(is_subgroup(d, rad, ctx));
}

TEST(Subgroup, RadicalOfTranslationsIsAllTranslations) {
  for (int k : {3, 4, 6}) {
    const GroupContext ctx = GroupContext::crystallographic(k);
    const SubgroupDescriptor rad = radical(subgroup_from_generators({GroupElement::translation(2, 1)}, ctx), ctx);
    EXPECT_FALSE(rad.has_rotation());
    EXPECT_EQ(rad.lattice.rank(), 2);
    EXPECT_TRUE(rad.lattice.contains(IVec2{1, 0}));
  }
}

TEST(Subgroup, Gamma2RadicalSaturates) {
  const GroupContext ctx = GroupContext::crystallographic(2);
  const SubgroupDescriptor rad = radical(subgroup_from_generators({GroupElement::translation(2, 2)}, ctx), ctx);
  EXPECT_TRUE(rad.lattice.contains(IVec2{1, 1}));
  EXPECT_EQ(rad.lattice.rank(), 1);
}

// A half-turn of Gamma_4 about (1/2, 0) has no 4-fold center there, so its
// radical is just the order-two stabilizer.
TEST(Subgroup, RotationOnlyRadicalIsCenterStabilizer) {
  const GroupContext ctx = GroupContext::crystallographic(4);
  const GroupElement half = el(1, 0, 2);
  const SubgroupDescriptor rad = radical(subgroup_from_generators({half}, ctx), ctx);
  ASSERT_TRUE(rad.has_rotation());
  EXPECT_TRUE(rad.lattice.is_trivial());
  EXPECT_EQ(rad.rotation->r, 2);
  EXPECT_TRUE(contains(rad, half, ctx));

  // A quarter-turn center: the stabilizer has order four.
  const SubgroupDescriptor rad4 = radical(subgroup_from_generators({el(1, 1, 2)}, ctx), ctx);
  ASSERT_TRUE(rad4.has_rotation());
  EXPECT_EQ(ctx.reduce(rad4.rotation->r) % 2, 1);
}

TEST(Subgroup, ConeRadicalIsWholeGroup) {
  const GroupContext ctx = GroupContext::cone(6);
  const SubgroupDescriptor rad = radical(subgroup_from_generators({GroupElement::rotation(3)}, ctx), ctx);
  EXPECT_TRUE(contains(rad, GroupElement::rotation(1), ctx));
}

TEST(Subgroup, AgreesWithBoundedClosure) {
  std::mt19937_64 rng(9);
  for (int k : {2, 3, 4, 6}) {
    const GroupContext ctx = GroupContext::crystallographic(k);
    for (int i = 0; i < 30; ++i) {
      std::vector<GroupElement> gens{random_el(ctx, rng), random_el(ctx, rng)};
      const SubgroupDescriptor d = subgroup_from_generators(gens, ctx);
      const BoundedClosure closure(gens, ctx, 24);
      for (const GroupElement& g : closure.elements()) {
        if (std::abs(g.t.x) <= 4 && std::abs(g.t.y) <= 4) {
          EXPECT_TRUE(contains(d, g, ctx)) << g;
        }
      }
      for (int x = -4; x <= 4; ++x) {
        for (int y = -4; y <= 4; ++y) {
          for (int r = 0; r < k; ++r) {
            const GroupElement g = el(x, y, r);
            EXPECT_EQ(contains(d, g, ctx), closure.contains(g)) << "k=" << k << " " << g;
          }
        }
      }
    }
  }
}

TEST(Invariants, CentAndTeich) {
  const GroupContext ctx = GroupContext::crystallographic(3);
  EXPECT_EQ(cent_dim(subgroup_from_generators({GroupElement::translation(1, 0)}, ctx)), 2);
  EXPECT_EQ(cent_dim(subgroup_from_generators({GroupElement::rotation(1)}, ctx)), 1);
  EXPECT_EQ(cent_dim(SubgroupDescriptor{}), 3);
  EXPECT_EQ(teich_dim(Lattice::full(), ctx), 1);
  EXPECT_EQ(teich_dim(Lattice::full(), GroupContext::crystallographic(2)), 3);
  EXPECT_EQ(teich_dim(Lattice{}, ctx), 0);
}

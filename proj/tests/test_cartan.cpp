#include <gtest/gtest.h>

#include <set>

#include "xns/cartan.hpp"
#include "xns/errors.hpp"

using namespace xns;

namespace {

std::vector<std::pair<int, int>> valid_levels(int max_p) {
  std::vector<std::pair<int, int>> out;
  for (int p = 7; p <= max_p; ++p) {
    if (!is_prime(p)) continue;
    for (int d = 3; d <= (p - 1) / 2; ++d)
      if (((p - 1) / 2) % d == 0) out.emplace_back(p, d);
  }
  return out;
}

}  // namespace

TEST(BuildContext, SubgroupExamples) {
  EXPECT_EQ(build_context(7, 3).H, (std::vector<int>{1, 6}));
  EXPECT_EQ(build_context(13, 3).H, (std::vector<int>{1, 5, 8, 12}));
}

TEST(BuildContext, NonResidueConvention) {
  EXPECT_EQ(build_context(7, 3).xi, 6);
  EXPECT_EQ(build_context(11, 5).xi, 10);
  EXPECT_EQ(build_context(13, 3).xi, 2);
  EXPECT_EQ(build_context(17, 4).xi, 3);
}

TEST(BuildContext, CosetOrderingIdentityFirst) {
  CartanContext ctx = build_context(13, 3);
  EXPECT_EQ(ctx.coset_reps, (std::vector<int>{1, 2, 4}));
  for (int x = 1; x < 13; ++x) {
    int rep = ctx.coset_reps[ctx.coset_of[x]];
    bool found = false;
    for (int h : ctx.H) found = found || ctx.mod(1L * rep * h) == x;
    EXPECT_TRUE(found) << x;
  }
}

TEST(BuildContext, Errors) {
  EXPECT_THROW(build_context(7, 2), BadIndex);
  EXPECT_THROW(build_context(7, 4), BadIndex);
  EXPECT_THROW(build_context(8, 3), BadLevel);
  EXPECT_THROW(build_context(5, 3), BadLevel);
  EXPECT_THROW(build_context(13, 3, std::vector<int>{1, 2, 3, 4}), BadSubgroup);
  EXPECT_NO_THROW(build_context(13, 3, std::vector<int>{1, 5, 8, 12}));
}

TEST(GroupOrder, Examples) {
  EXPECT_EQ(group_order(build_context(7, 3)), (std::pair<long, long>{96, 32}));
  EXPECT_EQ(group_order(build_context(11, 5)), (std::pair<long, long>{240, 48}));
}

TEST(GroupOrder, DeterminantBijection) {
  for (auto [p, d] : valid_levels(19)) {
    CartanContext ctx = build_context(p, d);
    std::vector<long> per_coset(d, 0);
    for (const Mat2& g : enumerate_G(ctx)) ++per_coset[ctx.coset_of[det(ctx, g)]];
    for (long n : per_coset) EXPECT_EQ(n, 2L * (p * p - 1) / d) << p << " " << d;
  }
}

TEST(Orbits, SizesAndCount) {
  auto o7 = orbit_decomposition(build_context(7, 3));
  ASSERT_EQ(o7.size(), 3u);
  for (const auto& o : o7) EXPECT_EQ(o.members.size(), 16u);
  auto o11 = orbit_decomposition(build_context(11, 5));
  ASSERT_EQ(o11.size(), 5u);
  for (const auto& o : o11) EXPECT_EQ(o.members.size(), 24u);
}

TEST(Orbits, ClosedUnderNegation) {
  CartanContext ctx = build_context(13, 6);
  for (const auto& o : orbit_decomposition(ctx)) {
    std::set<APoint> members(o.members.begin(), o.members.end());
    for (const auto& a : o.members) EXPECT_TRUE(members.count({ctx.mod(-a.x), ctx.mod(-a.y)}));
  }
}

// Exhaustive closure of every orbit under the right action of G_H.
TEST(Orbits, PropertyRightActionClosure) {
  for (auto [p, d] : valid_levels(31)) {
    CartanContext ctx = build_context(p, d);
    auto orbits = orbit_decomposition(ctx);
    auto gh = enumerate_G_H(ctx);
    for (const auto& o : orbits) {
      EXPECT_EQ(o.members.size(), static_cast<size_t>((p * p - 1) / d));
      std::set<APoint> members(o.members.begin(), o.members.end());
      for (const Mat2& g : gh) {
        for (const auto& a : o.members) ASSERT_TRUE(members.count(right_act(ctx, a, g))) << p << " " << d;
      }
      for (const auto& a : o.members) EXPECT_EQ(orbit_index_of(ctx, a), o.index);
    }
  }
}

TEST(Cusps, CountsAndPartition) {
  for (auto [p, d] : valid_levels(31)) {
    CartanContext ctx = build_context(p, d);
    auto cusps = cusp_classes(ctx);
    EXPECT_EQ(cusps.size(), static_cast<size_t>((p - 1) / 2));
    std::set<std::pair<int, int>> seen;
    for (const auto& c : cusps) {
      for (auto [x, y] : c.vectors) {
        int n = ctx.cusp_form(x, y);
        EXPECT_TRUE(n == c.label || n == p - c.label);
        EXPECT_TRUE(seen.insert({x, y}).second);
      }
      // sigma_c is in SL2 and sends (1,0)^T into the class.
      const auto& m = c.sigma.m;
      EXPECT_EQ(ctx.mod(1L * m[0] * m[3] - 1L * m[1] * m[2]), 1);
      int n = ctx.cusp_form(m[0], m[2]);
      EXPECT_TRUE(n == c.label || n == p - c.label);
    }
    EXPECT_EQ(seen.size(), static_cast<size_t>(p * p - 1));
  }
}

TEST(Cusps, FirstCuspHasIdentityRepresentative) {
  auto cusps = cusp_classes(build_context(7, 3));
  EXPECT_EQ(cusps[0].label, 1);
  EXPECT_EQ(cusps[0].sigma, Mat2{});
}

TEST(Galois, IdentityCosetFixesOrbits) {
  CartanContext ctx = build_context(11, 5);
  auto orbits = orbit_decomposition(ctx);
  for (const auto& o : orbits) EXPECT_EQ(galois_orbit_action(ctx, orbits, 0, o).index, o.index);
}

TEST(Galois, GeneratorCyclesAllOrbits) {
  CartanContext ctx = build_context(7, 3);
  auto orbits = orbit_decomposition(ctx);
  std::set<int> visited;
  Orbit cur = orbits[0];
  for (int i = 0; i < 3; ++i) {
    visited.insert(cur.index);
    cur = galois_orbit_action(ctx, orbits, 1, cur);
  }
  EXPECT_EQ(visited.size(), 3u);
  EXPECT_EQ(cur.index, orbits[0].index);
}

TEST(Galois, InverseCosetUndoesAction) {
  for (auto [p, d] : valid_levels(19)) {
    CartanContext ctx = build_context(p, d);
    auto orbits = orbit_decomposition(ctx);
    for (int s = 0; s < d; ++s) {
      int inv = ctx.coset_of[ctx.inverse(ctx.coset_reps[s])];
      for (const auto& o : orbits) {
        Orbit there = galois_orbit_action(ctx, orbits, s, o);
        EXPECT_EQ(galois_orbit_action(ctx, orbits, inv, there).index, o.index);
      }
    }
  }
}

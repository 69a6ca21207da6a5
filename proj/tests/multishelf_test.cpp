#include <gtest/gtest.h>

#include <algorithm>

#include "shelf/fixtures.hpp"
#include "shelf/multishelf.hpp"
#include "shelf/regular_embedding.hpp"
#include "shelf/search.hpp"

using namespace shelf;
using shelf::fixtures::berman_sigma;
using shelf::fixtures::berman_tau;

namespace {

// a * b = 2b - a mod 3
OpTable dihedral_quandle3() { return make_table(3, {{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}); }

} // namespace

TEST(DistributiveSet, Construction) {
  const DistributiveSet s(6, {berman_tau(), berman_sigma()});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.carrier_size(), 6u);
  EXPECT_THROW(DistributiveSet(3, {right_trivial(2)}), std::invalid_argument);
  EXPECT_THROW(make_distributive_set({}), std::invalid_argument);
  try {
    make_distributive_set({fixtures::xor_table()});
    FAIL() << "xor accepted";
  } catch (const NotDistributive &e) {
    EXPECT_EQ(e.witness(), (SetWitness{0, 0, Triple{0, 0, 1}}));
  }
}

TEST(Closure, EmptyFamilyIsTrivialMonoid) {
  const DistributiveSet s(4, {});
  const auto m = close_monoid(s);
  ASSERT_EQ(m.ops.size(), 1u);
  EXPECT_EQ(m.ops[0], right_trivial(4));
  EXPECT_EQ(m.cayley, (std::vector<std::vector<std::size_t>>{{0}}));
  EXPECT_TRUE(m.abelian);
}

TEST(Closure, SigmaGeneratesCyclicThree) {
  const auto g = close_group(make_distributive_set({berman_sigma()}));
  EXPECT_EQ(g.ops.size(), 3u);
  EXPECT_TRUE(g.abelian);
  EXPECT_EQ(g.ops[0], right_trivial(6));
  EXPECT_EQ(g.ops[1], berman_sigma());
}

TEST(Closure, BermanPairGeneratesNonAbelianGroupOfOrderSix) {
  const auto g = close_group(make_distributive_set({berman_tau(), berman_sigma()}));
  EXPECT_EQ(g.kind, ClosureKind::group);
  ASSERT_EQ(g.ops.size(), 6u);
  EXPECT_FALSE(g.abelian);
  const auto m = close_monoid(make_distributive_set({berman_tau(), berman_sigma()}));
  EXPECT_EQ(m.ops.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      EXPECT_EQ(g.ops[g.cayley[i][j]], compose(g.ops[i], g.ops[j]));
}

TEST(Closure, RegularImages) {
  EXPECT_EQ(close_group(make_distributive_set(regular_embed(cyclic(2)).images)).ops.size(), 2u);
  EXPECT_EQ(close_group(make_distributive_set(regular_embed(cyclic(3)).images)).ops.size(), 3u);
  // a single generator of Z5 reaches the whole image
  const auto z5 = regular_embed(cyclic(5));
  EXPECT_EQ(close_monoid(make_distributive_set({z5.images[1]})).ops.size(), 5u);
}

TEST(Closure, ResultIsClosedAndIdempotent) {
  const auto g = close_group(make_distributive_set({berman_tau(), berman_sigma()}));
  const auto again = close_group(DistributiveSet(6, g.ops));
  auto a = g.ops, b = again.ops;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);
}

TEST(Closure, Budget) {
  const auto s = make_distributive_set({berman_tau(), berman_sigma()});
  EXPECT_THROW(close_group(s, {.budget = 4}), BudgetExceeded);
  EXPECT_NO_THROW(close_group(s, {.budget = 6}));
}

TEST(Closure, NonInvertibleMemberHasNoGroupClosure) {
  // constant operation: distributive with itself but not invertible
  const auto s = make_distributive_set({make_table(2, {{0, 0}, {0, 0}})});
  EXPECT_EQ(close_monoid(s).ops.size(), 2u);
  EXPECT_THROW(close_group(s), std::domain_error);
}

TEST(Closure, AdjoiningInversesPreservesDistributivity) {
  const auto cat = enumerate_racks(3, true);
  for (const auto &a : cat.racks)
    for (const auto &b : cat.racks) {
      if (!compatible(a, b))
        continue;
      const std::vector<OpTable> with{a, b, invert(a), invert(b)};
      EXPECT_NO_THROW(DistributiveSet(3, with));
    }
}

TEST(IdempotentReport, Examples) {
  EXPECT_TRUE(idempotent_center_report(make_distributive_set({berman_tau(), berman_sigma()})).empty());
  const auto r = idempotent_center_report(make_distributive_set({dihedral_quandle3(), right_trivial(3)}));
  EXPECT_EQ(r, (std::vector<IdempotentFlag>{{0, true}, {1, true}}));
}

TEST(IdempotentReport, QuandlesAmongSmallRacks) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto cat = enumerate_racks(n, true);
    for (const auto &a : cat.racks)
      for (const auto &b : cat.racks)
        if (is_idempotent(a) && compatible(a, b)) {
          const auto r = idempotent_center_report(DistributiveSet(n, {a, b}));
          ASSERT_FALSE(r.empty());
          for (const auto &f : r)
            EXPECT_TRUE(f.commutes_with_all);
        }
  }
}

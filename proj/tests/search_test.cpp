#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "shelf/fixtures.hpp"
#include "shelf/search.hpp"
#include "test_support.hpp"

using namespace shelf;

TEST(Racks, CountsOnSmallCarriers) {
  const std::size_t labeled[] = {1, 2, 13, 114};
  const std::size_t classes[] = {1, 2, 6, 19};
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto cat = enumerate_racks(n, true);
    EXPECT_EQ(cat.racks.size(), labeled[n - 1]) << n;
    EXPECT_EQ(cat.canonical.size(), classes[n - 1]) << n;
    EXPECT_TRUE(std::is_sorted(cat.racks.begin(), cat.racks.end()));
  }
}

TEST(Racks, PrunedMatchesUnpruned) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto a = enumerate_racks(n, true);
    const auto b = enumerate_racks(n, false);
    EXPECT_EQ(a.racks, b.racks) << n;
    EXPECT_EQ(a.canonical, b.canonical) << n;
    EXPECT_LE(a.nodes, b.nodes);
  }
}

TEST(Racks, MatchesBruteForceFilter) {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<OpTable> want;
    for (const auto &op : oracle::all_invertible_tables(n))
      if (oracle::distributes_literally(op, op))
        want.push_back(op);
    std::sort(want.begin(), want.end());
    EXPECT_EQ(enumerate_racks(n, true).racks, want);
  }
}

TEST(Racks, Bounds) {
  EXPECT_THROW(enumerate_racks(kPrunedBound + 1, true), std::domain_error);
  EXPECT_THROW(enumerate_racks(kUnprunedBound + 1, false), std::domain_error);
  EXPECT_THROW(enumerate_racks(0, true), std::domain_error);
}

TEST(Racks, Predicate) {
  EXPECT_TRUE(is_rack(fixtures::berman_tau()));
  EXPECT_TRUE(is_rack(fixtures::berman_sigma()));
  EXPECT_FALSE(is_rack(fixtures::xor_table()));
  EXPECT_FALSE(is_rack(make_table(2, {{0, 0}, {0, 0}})));
}

TEST(CompatibilityGraph, TwoElements) {
  const auto cat = enumerate_racks(2, true);
  ASSERT_EQ(cat.racks.size(), 2u);
  EXPECT_EQ(compatibility_graph(cat), (CompatibilityGraph{{1}, {0}}));
}

TEST(CompatibilityGraph, RightTrivialIsUniversal) {
  const auto cat = enumerate_racks(4, true);
  const auto graph = compatibility_graph(cat);
  const auto t = std::find(cat.racks.begin(), cat.racks.end(), right_trivial(4)) - cat.racks.begin();
  ASSERT_LT(static_cast<std::size_t>(t), cat.racks.size());
  EXPECT_EQ(graph[t].size(), cat.racks.size() - 1);
  for (std::size_t i = 0; i < graph.size(); ++i) {
    EXPECT_TRUE(std::is_sorted(graph[i].begin(), graph[i].end()));
    for (auto j : graph[i]) {
      EXPECT_NE(i, j);
      EXPECT_TRUE(std::binary_search(graph[j].begin(), graph[j].end(), i));
      EXPECT_TRUE(oracle::distributes_literally(cat.racks[i], cat.racks[j]));
      EXPECT_TRUE(oracle::distributes_literally(cat.racks[j], cat.racks[i]));
    }
  }
}

TEST(CompatibilityGraph, BermanPairIsAdjacentAtSix) {
  const auto cat = enumerate_racks(6, true);
  EXPECT_EQ(cat.racks.size(), 36538u);
  EXPECT_EQ(cat.canonical.size(), 353u);
  const auto find = [&](const OpTable &op) {
    const auto it = std::lower_bound(cat.racks.begin(), cat.racks.end(), op);
    return it != cat.racks.end() && *it == op;
  };
  EXPECT_TRUE(find(fixtures::berman_tau()));
  EXPECT_TRUE(find(fixtures::berman_sigma()));
  EXPECT_TRUE(compatible(fixtures::berman_tau(), fixtures::berman_sigma()));
}

TEST(CanonicalForm, Examples) {
  EXPECT_EQ(canonical_form(right_trivial(3)), right_trivial(3));
  // the two non-trivial transposition racks on two points relabel to each other
  EXPECT_EQ(canonical_form(make_table(2, {{1, 1}, {0, 0}})), make_table(2, {{1, 1}, {0, 0}}));
  const OpTable a = make_table(3, {{0, 0, 0}, {2, 2, 2}, {1, 1, 1}});
  const OpTable b = make_table(3, {{1, 1, 1}, {0, 0, 0}, {2, 2, 2}});
  EXPECT_EQ(canonical_form(a), canonical_form(b));
  EXPECT_EQ(canonical_form(b), a);
  EXPECT_THROW(canonical_form(right_trivial(kCanonicalBound + 1)), std::domain_error);
}

TEST(CanonicalForm, InvariantUnderRelabeling) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + i % 4;
    const OpTable op = oracle::random_table(rng, n);
    const auto pi = oracle::random_perm(rng, n);
    const OpTable c = canonical_form(op);
    EXPECT_EQ(canonical_form(relabel(op, pi)), c);
    EXPECT_LE(c, op);
  }
  const std::vector<OpTable> family{fixtures::berman_tau(), fixtures::berman_sigma()};
  const auto pi = oracle::random_perm(rng, 6);
  const std::vector<OpTable> moved{relabel(family[1], pi), relabel(family[0], pi)};
  EXPECT_EQ(canonical_form(family), canonical_form(moved));
}

TEST(Certify, SmallCarriersAreCommutativeOnly) {
  const std::uint64_t pairs[] = {4, 30, 335};
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto r = certify_no_nonabelian(n);
    EXPECT_EQ(r.conclusion, Conclusion::commutative_only) << n;
    EXPECT_TRUE(r.catalog_built);
    EXPECT_EQ(r.compatible_pairs, pairs[n - 2]);
    EXPECT_EQ(r.noncommuting_pairs, 0u);
    EXPECT_TRUE(r.nonabelian_groups.empty());
  }
  EXPECT_EQ(certify_no_nonabelian(1).conclusion, Conclusion::commutative_only);
}

TEST(Certify, JobsDoNotChangeTheReport) {
  SearchOptions opts;
  opts.jobs = 3;
  const auto a = certify_no_nonabelian(4, opts);
  const auto b = certify_no_nonabelian(4);
  EXPECT_EQ(a.compatible_pairs, b.compatible_pairs);
  EXPECT_EQ(a.pairs_checked, b.pairs_checked);
  EXPECT_EQ(a.conclusion, b.conclusion);
}

TEST(Certify, SeededSixIsNonAbelian) {
  SearchOptions opts;
  opts.seed_pairs.emplace_back(fixtures::berman_tau(), fixtures::berman_sigma());
  const auto r = certify_no_nonabelian(6, opts);
  EXPECT_EQ(r.conclusion, Conclusion::nonabelian_found);
  EXPECT_FALSE(r.catalog_built);
  ASSERT_EQ(r.nonabelian_groups.size(), 1u);
  EXPECT_EQ(r.nonabelian_groups[0].order, 6u);
}

TEST(Certify, SeedThatCommutesDoesNotSettleTheSearch) {
  SearchOptions opts;
  opts.seed_pairs.emplace_back(right_trivial(3), right_trivial(3));
  const auto r = certify_no_nonabelian(3, opts);
  EXPECT_TRUE(r.catalog_built);
  EXPECT_EQ(r.conclusion, Conclusion::commutative_only);
}

TEST(Certify, ExhaustedBudgetIsPartial) {
  SearchOptions opts;
  opts.budget_seconds = 0;
  const auto r = certify_no_nonabelian(6, opts);
  EXPECT_EQ(r.conclusion, Conclusion::partial);
  EXPECT_TRUE(r.nonabelian_groups.empty());
}

TEST(Certify, Strings) {
  EXPECT_EQ(to_string(Conclusion::commutative_only), "commutative-only");
  EXPECT_EQ(to_string(Conclusion::nonabelian_found), "nonabelian-found");
  EXPECT_EQ(to_string(Conclusion::partial), "partial");
}

#include <gtest/gtest.h>

#include "isoblock/criterion.hpp"
#include "isoblock/errors.hpp"
#include "isoblock/oracle.hpp"
#include "test_support.hpp"

using namespace isoblock;
using isoblock::ts::w;

TEST(BfsExplore, WorkedExample) {
  const Exploration e = bfs_explore(ts::fig8(), 10);
  EXPECT_EQ(e.global_min_length, 4U);
  EXPECT_GE(e.visited_count, e.minimal_forms.size());
  const auto target = ts::set(2, {"ab", "A", "B"}).reduced();
  EXPECT_NE(std::find(e.minimal_forms.begin(), e.minimal_forms.end(), target), e.minimal_forms.end());
  for (const auto& form : e.minimal_forms) EXPECT_TRUE(check_a(TangencySet::from_cyclic(2, form)).first);
}

TEST(BfsExplore, EmptySet) {
  for (std::size_t cap : {0U, 3U}) {
    const Exploration e = bfs_explore(TangencySet(2, {}), cap);
    EXPECT_EQ(e.global_min_length, 0U);
    EXPECT_EQ(e.minimal_forms.size(), 1U);
    EXPECT_EQ(e.visited_count, 1U);
  }
}

TEST(BfsExplore, PrimitiveWord) {
  const TangencySet s = ts::set(2, {"ab"});
  const Exploration e = bfs_explore(s, 2);
  EXPECT_EQ(e.global_min_length, 1U);
  EXPECT_EQ(reduce(s).minimal.length(), 1U);
  // x1 and x2 and their inverses: the four primitive letters.
  EXPECT_EQ(e.minimal_forms.size(), 4U);
}

TEST(BfsExplore, Errors) {
  EXPECT_THROW(bfs_explore(ts::fig8(), 9), std::invalid_argument);
  EXPECT_THROW(bfs_explore(ts::fig8(), 10, 0), std::invalid_argument);
  EXPECT_THROW(bfs_explore(ts::fig8(), 10, 5), BudgetExceeded);
  EXPECT_THROW(certify_greedy(ts::fig8(), {.node_budget = 5}), BudgetExceeded);
}

TEST(BfsExplore, CapMonotone) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const TangencySet s = ts::random_set(rng, 2, 6);
    std::size_t prev = s.length() + 1;
    for (std::size_t cap = s.length(); cap <= s.length() + 2; ++cap) {
      const std::size_t m = bfs_explore(s, cap).global_min_length;
      ASSERT_LE(m, prev);
      prev = m;
    }
  }
}

TEST(BfsExplore, RotationsCollapse) {
  const TangencySet a = ts::set(2, {"ababb", "BBA", "AB"});
  const TangencySet b = ts::set(2, {"babba", "ABB", "BA"});
  const Exploration ea = bfs_explore(a, 10);
  const Exploration eb = bfs_explore(b, 10);
  EXPECT_EQ(ea.minimal_forms, eb.minimal_forms);
  EXPECT_EQ(ea.visited_count, eb.visited_count);
}

TEST(CertifyGreedy, Examples) {
  EXPECT_TRUE(certify_greedy(ts::fig8()));
  EXPECT_TRUE(certify_greedy(TangencySet(3, {})));
  EXPECT_TRUE(certify_greedy(ts::set(1, {"a", "a", "A", "A"})));
}

TEST(CertifyGreedy, RandomCampaign) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    const TangencySet s = ts::random_set(rng, 3, 8);
    ASSERT_TRUE(certify_greedy(s)) << to_string(s);
  }
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(minimal_level_connectivity(ts::fig8()));
  EXPECT_TRUE(minimal_level_connectivity(TangencySet(2, {})));
  EXPECT_TRUE(minimal_level_connectivity(ts::set(2, {"ab"})));
}

TEST(Connectivity, RandomCampaign) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    const TangencySet s = ts::random_set(rng, 2, 6);
    ASSERT_TRUE(minimal_level_connectivity(s)) << to_string(s);
    const Exploration e = bfs_explore(s, s.length());
    const bool first = check_a(TangencySet::from_cyclic(s.genus(), e.minimal_forms.front())).first;
    for (const auto& form : e.minimal_forms)
      ASSERT_EQ(check_a(TangencySet::from_cyclic(s.genus(), form)).first, first);
  }
}

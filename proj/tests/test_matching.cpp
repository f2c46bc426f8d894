#include <gtest/gtest.h>

#include <random>

#include "ffactor/matching.hpp"
#include "ffactor/random.hpp"
#include "oracles.hpp"

using namespace ffactor;

namespace {

bool is_matching(const Graph& g, const std::vector<Edge>& m) {
  std::vector<int> used(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : m) {
    if (!g.adjacent(e.u, e.v)) return false;
    if (used[e.u]++ || used[e.v]++) return false;
  }
  return true;
}

}  // namespace

TEST(MaximumMatching, Examples) {
  EXPECT_EQ(maximum_matching(cycle(6)).size(), 3u);
  EXPECT_EQ(maximum_matching(cycle(5)).size(), 2u);
  const auto petersen = maximum_matching(petersen_graph());
  EXPECT_EQ(petersen.size(), 5u);
  EXPECT_EQ(oracle::max_matching(petersen_graph()), 5);
  EXPECT_TRUE(is_matching(petersen_graph(), petersen));
  EXPECT_TRUE(maximum_matching(empty_graph(4)).empty());
}

TEST(MaximumMatching, BlossomsNeedContraction) {
  // Two triangles joined by a path: greedy choices inside odd cycles must be undone.
  const Graph g = build_graph(8, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 5}});
  EXPECT_EQ(maximum_matching(g).size(), 4u);
}

TEST(MaximumMatching, MatchesExhaustiveSearch) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    std::mt19937_64 rng(seed);
    const int n = std::uniform_int_distribution<int>(0, 8)(rng);
    const Graph g = random_graph(n, std::uniform_real_distribution<double>(0.1, 0.9)(rng), seed);
    const auto m = maximum_matching(g);
    ASSERT_TRUE(is_matching(g, m));
    ASSERT_EQ(static_cast<int>(m.size()), oracle::max_matching(g)) << "seed " << seed;
  }
}

TEST(MaximumMatching, LargerGraphsAreValid) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_graph(60, 0.08, seed);
    const auto m = maximum_matching(g);
    EXPECT_TRUE(is_matching(g, m));
  }
}

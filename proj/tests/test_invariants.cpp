#include <gtest/gtest.h>

#include <random>

#include "ffactor/constructions.hpp"
#include "ffactor/invariants.hpp"
#include "ffactor/random.hpp"
#include "oracles.hpp"

using namespace ffactor;

namespace {

ExtRational from_pair(std::pair<long, long> r) {
  return r.second == 0 ? ExtRational::infinity() : ExtRational(Rational(r.first, r.second));
}

ConstructionReport scaled_g0() { return build_g0(1, 3, 1, 12, 2); }

}  // namespace

TEST(StabilityNumber, Examples) {
  EXPECT_EQ(stability_number(complete_graph(6)).size, 1);
  EXPECT_EQ(stability_number(cycle(5)).size, 2);
  const ConstructionReport g0 = scaled_g0();
  EXPECT_EQ(stability_number(g0.graph).size, 2);
  EXPECT_EQ(stability_number(petersen_graph()).size, 4);
}

TEST(StabilityNumber, WitnessIsIndependent) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = random_graph(14, 0.3, seed);
    const IndependentSet is = stability_number(g);
    EXPECT_EQ(static_cast<int>(is.witness.size()), is.size);
    for (int u : is.witness)
      for (int v : is.witness) EXPECT_FALSE(g.adjacent(u, v));
  }
}

TEST(StabilityNumber, MatchesSubsetEnumeration) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    std::mt19937_64 rng(seed);
    const int n = std::uniform_int_distribution<int>(0, 12)(rng);
    const Graph g = random_graph(n, std::uniform_real_distribution<double>(0.05, 0.95)(rng), seed);
    ASSERT_EQ(stability_number(g).size, oracle::alpha(g)) << "seed " << seed;
  }
}

TEST(VertexConnectivity, Examples) {
  EXPECT_EQ(vertex_connectivity(complete_graph(5)), 4);
  EXPECT_EQ(vertex_connectivity(cycle(6)), 2);
  EXPECT_EQ(vertex_connectivity(star(3)), 1);
  EXPECT_EQ(vertex_connectivity(petersen_graph()), 3);
  EXPECT_EQ(vertex_connectivity(disjoint_union({complete_graph(3), complete_graph(3)})), 0);
  EXPECT_EQ(vertex_connectivity(scaled_g0().graph), 1);
}

TEST(VertexConnectivity, MatchesSeparatorSearch) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    std::mt19937_64 rng(seed);
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    const Graph g = random_graph(n, std::uniform_real_distribution<double>(0.2, 1.0)(rng), seed);
    ASSERT_EQ(vertex_connectivity(g), oracle::kappa(g)) << "seed " << seed;
  }
}

TEST(OddComponentCount, Examples) {
  EXPECT_EQ(odd_component_count(star(3), VertexSet{0}, DegreeSpec::uniform(4, 1)), 3);
  EXPECT_EQ(odd_component_count(cycle(4), VertexSet{}, DegreeSpec::uniform(4, 2)), 0);
  const ConstructionReport g0 = scaled_g0();
  EXPECT_EQ(odd_component_count(g0.graph, VertexSet{0}, g0.f), 2);
}

TEST(OddComponentCount, ParityOfEmptyCutMatchesTotal) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = random_graph(9, 0.25, seed);
    const DegreeSpec f = random_degree_spec(g, 0, 3, seed) ;
    std::vector<int> values = f.values();
    values[0] += static_cast<int>(seed % 2);
    const DegreeSpec h(values);
    EXPECT_EQ(odd_component_count(g, VertexSet{}, h) % 2, h.total() % 2);
  }
}

TEST(OddToughness, Examples) {
  EXPECT_TRUE(odd_toughness(complete_graph(5), DegreeSpec::uniform(5, 1)).value.is_infinite());
  EXPECT_EQ(odd_toughness(star(3), DegreeSpec::uniform(4, 1)).value, ExtRational(Rational(1, 3)));
  const ConstructionReport g0 = scaled_g0();
  const CutsetRatio r = odd_toughness(g0.graph, g0.f, Limits{.toughness_max_n = 2000});
  EXPECT_EQ(r.value, ExtRational(Rational(1, 2)));
  EXPECT_THROW(odd_toughness(g0.graph, g0.f), SizeCapError);
  EXPECT_THROW(odd_toughness(disjoint_union({complete_graph(2), complete_graph(2)}), DegreeSpec::uniform(4, 1)),
               std::invalid_argument);
}

TEST(OddToughness, StarAgainstEnumeration) {
  const auto r = oracle::cutset_ratio(star(3), nullptr);
  const DegreeSpec f = DegreeSpec::uniform(4, 1);
  EXPECT_EQ(from_pair(oracle::cutset_ratio(star(3), &f)), ExtRational(Rational(1, 3)));
  EXPECT_EQ(from_pair(r), ExtRational(Rational(1, 3)));
}

TEST(IsTOddTough, Examples) {
  EXPECT_TRUE(is_t_odd_tough(complete_graph(5), DegreeSpec::uniform(5, 1), Rational(1)));
  EXPECT_TRUE(is_t_odd_tough(star(3), DegreeSpec::uniform(4, 1), Rational(1, 3)));
  EXPECT_FALSE(is_t_odd_tough(star(3), DegreeSpec::uniform(4, 1), Rational(1, 2)));
}

TEST(Toughness, Examples) {
  EXPECT_EQ(toughness(cycle(6)).value, ExtRational(Rational(1)));
  EXPECT_EQ(toughness(star(3)).value, ExtRational(Rational(1, 3)));
  EXPECT_TRUE(toughness(complete_graph(4)).value.is_infinite());
  EXPECT_EQ(toughness(petersen_graph()).value, ExtRational(Rational(4, 3)));
}

TEST(Toughness, MatchesEnumerationAndWitnessRechecks) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    std::mt19937_64 rng(seed);
    const int n = std::uniform_int_distribution<int>(2, 10)(rng);
    const Graph g = random_connected_graph(n, std::uniform_real_distribution<double>(0.3, 0.9)(rng), seed);
    const DegreeSpec f = random_degree_spec(g, 0, 3, seed + 7);

    const CutsetRatio t = toughness(g);
    const CutsetRatio odd = odd_toughness(g, f);
    ASSERT_EQ(t.value, from_pair(oracle::cutset_ratio(g, nullptr))) << "seed " << seed;
    ASSERT_EQ(odd.value, from_pair(oracle::cutset_ratio(g, &f))) << "seed " << seed;
    EXPECT_GE(odd.value, t.value);
    if (!odd.value.is_infinite()) {
      const int h = odd_component_count(g, odd.witness, f);
      EXPECT_EQ(odd.value, ExtRational(Rational(static_cast<std::int64_t>(odd.witness.size()), h)));
    }
  }
}

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffactor/graph.hpp"

namespace ffactor {

/// Per-trial seed derived from a campaign seed (splitmix64 finaliser).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace detail {

inline Graph sample_gnp(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (coin(rng)) edges.push_back({x, y});
  return Graph::from_edges(n, edges);
}

inline void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0,1]");
}

}  // namespace detail

/// G(n, p), deterministic for a fixed seed.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  detail::check_probability(p);
  std::mt19937_64 rng(seed);
  return detail::sample_gnp(n, p, rng);
}

/// G(n, p) resampled until connected.
inline Graph random_connected_graph(int n, double p, std::uint64_t seed, int max_attempts = 1000) {
  detail::check_probability(p);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Graph g = detail::sample_gnp(n, p, rng);
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("no connected sample of G(" + std::to_string(n) + ", " + std::to_string(p) + ") after " +
                           std::to_string(max_attempts) + " attempts");
}

/// f(x) uniform in [a,b]; an odd total is repaired by moving the first
/// adjustable vertex one step inside the bounds.
inline DegreeSpec random_degree_spec(const Graph& g, int a, int b, std::uint64_t seed) {
  if (a < 0 || a > b) throw std::invalid_argument("random_degree_spec needs 0 <= a <= b");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(a, b);
  std::vector<int> values(static_cast<std::size_t>(g.order()));
  long total = 0;
  for (auto& v : values) total += (v = pick(rng));
  if (total % 2 != 0) {
    bool repaired = false;
    for (auto& v : values) {
      if (v < b) {
        ++v;
        repaired = true;
        break;
      }
      if (v > a) {
        --v;
        repaired = true;
        break;
      }
    }
    if (!repaired) {
      throw std::invalid_argument("f(X) is odd and cannot be repaired with a = b = " + std::to_string(a));
    }
  }
  return DegreeSpec(std::move(values));
}

}  // namespace ffactor

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ffactor/bounds.hpp"
#include "ffactor/graph.hpp"
#include "ffactor/rational.hpp"
#include "ffactor/tutte.hpp"

namespace ffactor {

enum class ExpectedExistence {
  no_factor_parity,     // f(X) is odd
  no_factor_deficiency, // the recorded witness pair has negative deficiency
  undetermined,         // nothing is claimed; the solver decides
};

inline const char* to_string(ExpectedExistence e) {
  switch (e) {
    case ExpectedExistence::no_factor_parity: return "no-factor-parity";
    case ExpectedExistence::no_factor_deficiency: return "no-factor-deficiency";
    case ExpectedExistence::undetermined: return "undetermined";
  }
  return "?";
}

/// A generated instance with the analytic values tests recompute.
struct ConstructionReport {
  std::string family;
  std::vector<std::pair<std::string, int>> parameters;
  Graph graph;
  DegreeSpec f;
  int expected_alpha = 0;
  int expected_min_degree = 0;
  std::int64_t f_total = 0;
  ExpectedExistence expected = ExpectedExistence::undetermined;
  std::optional<SubsetPair> witness;
  std::optional<std::int64_t> witness_delta;

  // G0: 4a(δ-b)/(b+1)^2 and whether p meets it. G1: a(δ-r+1)/(r(b+1-r)).
  std::optional<Rational> stability_bound;
  std::optional<bool> stability_hypothesis_met;
  std::optional<Rational> tightness_threshold;
  bool paper_regime = false;  // G0: δ >= (b+1)^3+b.  G1: α > δ > b > r.

  bool f_total_even() const { return f_total % 2 == 0; }
  int param(const std::string& name) const {
    for (const auto& [k, v] : parameters)
      if (k == name) return v;
    throw std::out_of_range("no parameter " + name);
  }
};

/// Cai-conjecture counterexample family: a clique S of k vertices and p
/// copies C_1..C_p of K_{δ+1}; S ∪ C_1 is complete and, for i >= 2, one edge
/// joins the lowest vertex of S to the lowest vertex of C_i. f = a on S and b
/// elsewhere. Vertices are numbered S first, then C_1..C_p.
inline ConstructionReport build_g0(int a, int b, int k, int delta, int p) {
  if (b % 2 == 0) throw std::invalid_argument("g0: b must be odd");
  if (delta % 2 != 0) throw std::invalid_argument("g0: delta must be even");
  if (delta < 2) throw std::invalid_argument("g0: delta must be at least 2");
  if (k < 1) throw std::invalid_argument("g0: k must be at least 1");
  if (k >= b) throw std::invalid_argument("g0: k must be less than b");
  if (p < 2) throw std::invalid_argument("g0: p must be at least 2");
  if (a < 0 || a > b) throw std::invalid_argument("g0: need 0 <= a <= b");

  const int block = delta + 1;
  const int n = k + p * block;
  std::vector<Edge> edges;
  auto clique = [&](int first, int size) {
    for (int x = first; x < first + size; ++x)
      for (int y = x + 1; y < first + size; ++y) edges.push_back({x, y});
  };
  clique(0, k + block);  // S ∪ C_1
  for (int i = 1; i < p; ++i) {
    const int first = k + i * block;
    clique(first, block);
    edges.push_back({0, first});
  }

  std::vector<int> values(static_cast<std::size_t>(n), b);
  for (int v = 0; v < k; ++v) values[static_cast<std::size_t>(v)] = a;

  ConstructionReport r;
  r.family = "g0";
  r.parameters = {{"a", a}, {"b", b}, {"k", k}, {"delta", delta}, {"p", p}};
  r.graph = Graph::from_edges(n, edges);
  r.f = DegreeSpec(std::move(values));
  r.expected_alpha = p;
  r.expected_min_degree = delta;
  r.f_total = static_cast<std::int64_t>(a) * k + static_cast<std::int64_t>(b) * p * block;
  r.stability_bound = detail::stability_bound(a, b, delta);
  r.stability_hypothesis_met = Rational(p) <= *r.stability_bound;
  r.paper_regime = delta >= (b + 1) * (b + 1) * (b + 1) + b;

  // b(δ+1) is odd, so every C_i is an odd component of G - S.
  const std::int64_t whole_s = static_cast<std::int64_t>(a) * k - p;
  // G - s_0 leaves C_2..C_p plus the block S\{s_0} ∪ C_1.
  const std::int64_t rest_parity = (static_cast<std::int64_t>(a) * (k - 1) + static_cast<std::int64_t>(b) * block) % 2;
  const std::int64_t hub_only = a - (p - 1) - rest_parity;
  if (hub_only < whole_s) {
    r.witness = SubsetPair{VertexSet{0}, {}};
    r.witness_delta = hub_only;
  } else {
    r.witness = SubsetPair{VertexSet::range(0, k), {}};
    r.witness_delta = whole_s;
  }
  if (!r.f_total_even()) {
    r.expected = ExpectedExistence::no_factor_parity;
  } else if (*r.witness_delta < 0) {
    r.expected = ExpectedExistence::no_factor_deficiency;
  } else {
    r.expected = ExpectedExistence::undetermined;
  }
  if (*r.witness_delta >= 0) {
    r.witness.reset();
    r.witness_delta.reset();
  }
  return r;
}

/// G0 in the asymptotic regime: δ is the least even value >= (b+1)^3 + b and p
/// is the largest integer <= 4a(δ-b)/(b+1)^2 with p > a·k and f(X) even.
inline ConstructionReport g0_paper_preset(int a, int b, int k) {
  if (b % 2 == 0) throw std::invalid_argument("g0: b must be odd");
  int delta = (b + 1) * (b + 1) * (b + 1) + b;
  if (delta % 2 != 0) ++delta;
  const Rational bound = detail::stability_bound(a, b, delta);
  for (std::int64_t p = bound.floor(); p > static_cast<std::int64_t>(a) * k && p >= 2; --p) {
    const std::int64_t total = static_cast<std::int64_t>(a) * k + static_cast<std::int64_t>(b) * p * (delta + 1);
    if (total % 2 == 0) return build_g0(a, b, k, delta, static_cast<int>(p));
  }
  throw std::invalid_argument("g0 preset: no admissible p for these parameters");
}

/// Tightness family: the join of A = K_{δ-r+1} with α disjoint copies of K_r,
/// f = a on A and b on the copies. A comes first, then the copies in order.
inline ConstructionReport build_g1(int a, int b, int r, int delta, int alpha) {
  if (r < 1) throw std::invalid_argument("g1: r must be at least 1");
  if (b <= r) throw std::invalid_argument("g1: b > r violated");
  if (delta < r) throw std::invalid_argument("g1: delta >= r violated");
  if (alpha < 1) throw std::invalid_argument("g1: alpha must be at least 1");
  if (a < 0) throw std::invalid_argument("g1: a must be nonnegative");

  const int core = delta - r + 1;
  std::vector<Graph> copies(static_cast<std::size_t>(alpha), complete_graph(r));
  ConstructionReport rep;
  rep.family = "g1";
  rep.parameters = {{"a", a}, {"b", b}, {"r", r}, {"delta", delta}, {"alpha", alpha}};
  rep.graph = join(complete_graph(core), disjoint_union(copies));
  std::vector<int> values(static_cast<std::size_t>(core + alpha * r), b);
  for (int v = 0; v < core; ++v) values[static_cast<std::size_t>(v)] = a;
  rep.f = DegreeSpec(std::move(values));
  rep.expected_alpha = alpha;
  rep.expected_min_degree = delta;
  rep.f_total = static_cast<std::int64_t>(a) * core + static_cast<std::int64_t>(b) * alpha * r;
  rep.tightness_threshold = Rational(static_cast<std::int64_t>(a) * core, static_cast<std::int64_t>(r) * (b + 1 - r));
  rep.paper_regime = alpha > delta && delta > b && b > r;

  rep.witness = SubsetPair{VertexSet::range(0, core), VertexSet::range(core, core + alpha * r)};
  rep.witness_delta = static_cast<std::int64_t>(a) * core - static_cast<std::int64_t>(alpha) * r * (b + 1 - r);
  if (!rep.f_total_even()) {
    rep.expected = ExpectedExistence::no_factor_parity;
  } else if (Rational(alpha) > *rep.tightness_threshold) {
    rep.expected = ExpectedExistence::no_factor_deficiency;
  } else {
    rep.expected = ExpectedExistence::undetermined;
  }
  if (*rep.witness_delta >= 0) {
    rep.witness.reset();
    rep.witness_delta.reset();
  }
  return rep;
}

/// (4a(δ-b)/(b+1)^2, 2a/(b+1)): the main bound and the extra room the
/// tightness family leaves at r = (b+1)/2.
inline std::pair<Rational, Rational> necessity_margin(int a, int b, int delta) {
  if (b % 2 == 0) throw std::invalid_argument("necessity_margin needs b odd");
  if (b < 3) throw std::invalid_argument("necessity_margin needs b >= 3");
  if (delta < b) throw std::invalid_argument("necessity_margin needs delta >= b");
  return {detail::stability_bound(a, b, delta), Rational(2LL * a, b + 1)};
}

}  // namespace ffactor

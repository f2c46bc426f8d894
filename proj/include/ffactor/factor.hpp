#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ffactor/graph.hpp"
#include "ffactor/limits.hpp"
#include "ffactor/matching.hpp"

namespace ffactor {

/// Spanning subgraph given by its edge list (sorted, u < v).
struct FactorSubgraph {
  std::vector<Edge> edges;

  friend bool operator==(const FactorSubgraph&, const FactorSubgraph&) = default;
};

/// Auxiliary graph whose perfect matchings correspond to f-factors.
///
/// Vertex v of degree d becomes d external vertices, one per incident edge in
/// neighbour order, followed by d - f(v) internal vertices; externals and
/// internals of v form a complete bipartite block. Each original edge uv adds
/// one bridge between the external copy of uv at u and the one at v. An
/// original edge is in the factor iff its bridge is matched.
struct GadgetGraph {
  enum class Role { external, internal };
  struct VertexRole {
    int owner = 0;
    Role role = Role::external;
    int other_end = -1;  // for externals: the original neighbour
  };

  Graph graph;
  std::vector<VertexRole> roles;
  std::vector<int> first_external;  // per original vertex
  std::vector<int> first_internal;  // per original vertex
  std::vector<Edge> original_edges;
  std::vector<Edge> bridges;        // bridges[i] realises original_edges[i]

  int external_of(const Graph& g, int v, int neighbor) const {
    const auto nbrs = g.neighbors(v);
    const auto pos = std::lower_bound(nbrs.begin(), nbrs.end(), neighbor) - nbrs.begin();
    return first_external[static_cast<std::size_t>(v)] + static_cast<int>(pos);
  }
};

inline GadgetGraph tutte_gadget(const Graph& g, const DegreeSpec& f) {
  f.check_against(g);
  const int n = g.order();
  GadgetGraph out;
  out.first_external.resize(static_cast<std::size_t>(n));
  out.first_internal.resize(static_cast<std::size_t>(n));
  int next = 0;
  for (int v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (f[v] > d) {
      throw std::invalid_argument("f(" + std::to_string(v) + ") = " + std::to_string(f[v]) + " exceeds degree " +
                                  std::to_string(d));
    }
    out.first_external[static_cast<std::size_t>(v)] = next;
    for (int y : g.neighbors(v)) out.roles.push_back({v, GadgetGraph::Role::external, y});
    next += d;
    out.first_internal[static_cast<std::size_t>(v)] = next;
    for (int i = 0; i < d - f[v]; ++i) out.roles.push_back({v, GadgetGraph::Role::internal, -1});
    next += d - f[v];
  }

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(next));
  for (int v = 0; v < n; ++v) {
    const int ext = out.first_external[static_cast<std::size_t>(v)];
    const int in = out.first_internal[static_cast<std::size_t>(v)];
    const int d = g.degree(v);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d - f[v]; ++j) {
        adj[static_cast<std::size_t>(ext + i)].push_back(in + j);
        adj[static_cast<std::size_t>(in + j)].push_back(ext + i);
      }
    }
  }
  out.original_edges = g.edges();
  out.bridges.reserve(out.original_edges.size());
  for (const Edge& e : out.original_edges) {
    const int x = out.external_of(g, e.u, e.v);
    const int y = out.external_of(g, e.v, e.u);
    adj[static_cast<std::size_t>(x)].push_back(y);
    adj[static_cast<std::size_t>(y)].push_back(x);
    out.bridges.push_back(make_edge(x, y));
  }
  out.graph = Graph::from_adjacency(std::move(adj));
  return out;
}

/// True iff H is a spanning subgraph of G with d_H(x) = f(x) everywhere.
inline bool verify_f_factor(const Graph& g, const DegreeSpec& f, const FactorSubgraph& h) {
  if (f.size() != g.order()) return false;
  std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
  std::vector<Edge> seen;
  for (const Edge& e : h.edges) {
    if (e.u < 0 || e.v >= g.order() || e.u >= e.v || !g.adjacent(e.u, e.v)) return false;
    seen.push_back(e);
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (deg[static_cast<std::size_t>(v)] != f[v]) return false;
  }
  return true;
}

/// Constructs an f-factor if one exists (exact).
inline std::optional<FactorSubgraph> find_f_factor(const Graph& g, const DegreeSpec& f) {
  f.check_against(g);
  if (f.total() % 2 != 0) return std::nullopt;
  for (int v = 0; v < g.order(); ++v) {
    if (f[v] > g.degree(v)) return std::nullopt;
  }

  const GadgetGraph gadget = tutte_gadget(g, f);
  detail::BlossomMatcher matcher(gadget.graph);

  // Seed with a greedy degree-bounded edge choice in edge order, then fill the
  // remaining externals of each vertex with its internals.
  std::vector<int> residual = f.values();
  std::vector<char> used_external(gadget.roles.size(), 0);
  for (std::size_t i = 0; i < gadget.original_edges.size(); ++i) {
    const Edge& e = gadget.original_edges[i];
    if (residual[static_cast<std::size_t>(e.u)] > 0 && residual[static_cast<std::size_t>(e.v)] > 0) {
      --residual[static_cast<std::size_t>(e.u)];
      --residual[static_cast<std::size_t>(e.v)];
      matcher.set_mate(gadget.bridges[i].u, gadget.bridges[i].v);
      used_external[static_cast<std::size_t>(gadget.bridges[i].u)] = 1;
      used_external[static_cast<std::size_t>(gadget.bridges[i].v)] = 1;
    }
  }
  for (int v = 0; v < g.order(); ++v) {
    int internal = gadget.first_internal[static_cast<std::size_t>(v)];
    const int internal_end = internal + g.degree(v) - f[v];
    for (int x = gadget.first_external[static_cast<std::size_t>(v)];
         x < gadget.first_internal[static_cast<std::size_t>(v)] && internal < internal_end; ++x) {
      if (!used_external[static_cast<std::size_t>(x)]) matcher.set_mate(x, internal++);
    }
  }

  if (!matcher.augment_all(true)) return std::nullopt;

  FactorSubgraph h;
  for (std::size_t i = 0; i < gadget.bridges.size(); ++i) {
    if (matcher.mate(gadget.bridges[i].u) == gadget.bridges[i].v) h.edges.push_back(gadget.original_edges[i]);
  }
  return h;
}

namespace detail {

// Include-first search over edges in lexicographic order with degree windows
// [low(v), high(v)]; the first hit is the lexicographically smallest witness
// among equal-size subgraphs.
inline std::optional<FactorSubgraph> brute_force_degree_window(const Graph& g, const std::vector<int>& low,
                                                               const std::vector<int>& high, const Limits& limits) {
  const std::vector<Edge> edges = g.edges();
  if (static_cast<long>(edges.size()) > limits.brute_max_m) {
    throw SizeCapError("brute-force cap (m)", limits.brute_max_m, static_cast<long>(edges.size()));
  }
  const int n = g.order();
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::vector<int> remaining(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    remaining[static_cast<std::size_t>(v)] = g.degree(v);
    if (g.degree(v) < low[static_cast<std::size_t>(v)] || high[static_cast<std::size_t>(v)] < 0) return std::nullopt;
  }
  std::vector<char> chosen(edges.size(), 0);
  auto feasible = [&](int v) {
    return deg[static_cast<std::size_t>(v)] + remaining[static_cast<std::size_t>(v)] >= low[static_cast<std::size_t>(v)];
  };
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == edges.size()) return true;
    const auto [u, v] = edges[i];
    --remaining[static_cast<std::size_t>(u)];
    --remaining[static_cast<std::size_t>(v)];
    if (deg[static_cast<std::size_t>(u)] < high[static_cast<std::size_t>(u)] &&
        deg[static_cast<std::size_t>(v)] < high[static_cast<std::size_t>(v)]) {
      ++deg[static_cast<std::size_t>(u)];
      ++deg[static_cast<std::size_t>(v)];
      chosen[i] = 1;
      if (feasible(u) && feasible(v) && search(i + 1)) return true;
      chosen[i] = 0;
      --deg[static_cast<std::size_t>(u)];
      --deg[static_cast<std::size_t>(v)];
    }
    if (feasible(u) && feasible(v) && search(i + 1)) return true;
    ++remaining[static_cast<std::size_t>(u)];
    ++remaining[static_cast<std::size_t>(v)];
    return false;
  };
  if (!search(0)) return std::nullopt;
  FactorSubgraph h;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (chosen[i]) h.edges.push_back(edges[i]);
  }
  return h;
}

}  // namespace detail

/// Exhaustive f-factor search over edge subsets; refuses m above limits.brute_max_m.
inline std::optional<FactorSubgraph> brute_force_f_factor(const Graph& g, const DegreeSpec& f, const Limits& limits = {}) {
  f.check_against(g);
  return detail::brute_force_degree_window(g, f.values(), f.values(), limits);
}

/// Exhaustive [a,b]-factor search; refuses m above limits.brute_max_m.
inline std::optional<FactorSubgraph> brute_force_ab_factor(const Graph& g, int a, int b, const Limits& limits = {}) {
  if (a > b) throw std::invalid_argument("[a,b]-factor needs a <= b");
  const auto n = static_cast<std::size_t>(g.order());
  return detail::brute_force_degree_window(g, std::vector<int>(n, a), std::vector<int>(n, b), limits);
}

}  // namespace ffactor

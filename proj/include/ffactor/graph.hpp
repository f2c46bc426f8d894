#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ffactor {

/// Undirected edge stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int x, int y) { return x < y ? Edge{x, y} : Edge{y, x}; }

/// Sorted, duplicate-free set of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;

  /// Sorts and deduplicates; indices are validated against `n` when given.
  explicit VertexSet(std::vector<int> items, std::optional<int> n = std::nullopt) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    if (n) {
      for (int x : items_) {
        if (x < 0 || x >= *n) {
          throw std::out_of_range("vertex " + std::to_string(x) + " out of range for n = " + std::to_string(*n));
        }
      }
    }
  }
  VertexSet(std::initializer_list<int> items) : VertexSet(std::vector<int>(items)) {}

  static VertexSet range(int first, int last) {
    std::vector<int> items(static_cast<std::size_t>(std::max(0, last - first)));
    std::iota(items.begin(), items.end(), first);
    VertexSet s;
    s.items_ = std::move(items);
    return s;
  }

  /// Members of a bitmask over vertices 0..63.
  static VertexSet from_mask(std::uint64_t mask) {
    VertexSet s;
    for (int v = 0; mask != 0; ++v, mask >>= 1) {
      if (mask & 1U) s.items_.push_back(v);
    }
    return s;
  }

  bool contains(int v) const { return std::binary_search(items_.begin(), items_.end(), v); }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  int operator[](std::size_t i) const { return items_[i]; }
  const std::vector<int>& items() const { return items_; }

  bool disjoint_from(const VertexSet& other) const {
    auto a = items_.begin();
    auto b = other.items_.begin();
    while (a != items_.end() && b != other.items_.end()) {
      if (*a == *b) return false;
      if (*a < *b) ++a; else ++b;
    }
    return true;
  }

  VertexSet united(const VertexSet& other) const {
    VertexSet out;
    std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                   std::back_inserter(out.items_));
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.items_ <=> b.items_; }

 private:
  std::vector<int> items_;
};

/// Immutable simple undirected graph on vertices 0..n-1 with sorted adjacency.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph; duplicate and reversed pairs collapse, loops and
  /// out-of-range indices throw.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> pairs) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    for (auto [x, y] : pairs) {
      if (x < 0 || x >= n || y < 0 || y >= n) {
        throw std::out_of_range("edge (" + std::to_string(x) + "," + std::to_string(y) +
                                ") has an index out of range for n = " + std::to_string(n));
      }
      if (x == y) throw std::invalid_argument("loop edge at vertex " + std::to_string(x));
      g.adj_[static_cast<std::size_t>(x)].push_back(y);
      g.adj_[static_cast<std::size_t>(y)].push_back(x);
    }
    g.finish();
    return g;
  }

  static Graph from_edges(int n, std::span<const Edge> edges) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edges.size());
    for (const Edge& e : edges) pairs.emplace_back(e.u, e.v);
    return from_edges(n, std::span<const std::pair<int, int>>(pairs));
  }

  /// Adopts adjacency lists that may be unsorted; symmetry is the caller's job.
  static Graph from_adjacency(std::vector<std::vector<int>> adj) {
    Graph g;
    g.adj_ = std::move(adj);
    g.finish();
    return g;
  }

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return m_; }
  std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  bool adjacent(int x, int y) const {
    const auto& row = adj_[static_cast<std::size_t>(x)];
    return std::binary_search(row.begin(), row.end(), y);
  }

  /// All edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int x = 0; x < order(); ++x) {
      for (int y : neighbors(x)) {
        if (x < y) out.push_back({x, y});
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void finish() {
    std::size_t total = 0;
    for (auto& row : adj_) {
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
      total += row.size();
    }
    m_ = total / 2;
  }

  std::vector<std::vector<int>> adj_;
  std::size_t m_ = 0;
};

inline Graph build_graph(int n, std::span<const std::pair<int, int>> pairs) { return Graph::from_edges(n, pairs); }
inline Graph build_graph(int n, std::initializer_list<std::pair<int, int>> pairs) {
  return Graph::from_edges(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
}

/// The function f: per-vertex target degrees, with optional declared bounds.
class DegreeSpec {
 public:
  DegreeSpec() = default;
  explicit DegreeSpec(std::vector<int> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[i] < 0) throw std::invalid_argument("f(" + std::to_string(i) + ") is negative");
    }
  }

  static DegreeSpec uniform(int n, int value) { return DegreeSpec(std::vector<int>(static_cast<std::size_t>(n), value)); }

  /// Declares bounds a <= f(x) <= b, checking every value.
  DegreeSpec with_bounds(int a, int b) const {
    if (a > b) throw std::invalid_argument("declared bounds have a > b");
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[i] < a || values_[i] > b) {
        throw std::invalid_argument("f(" + std::to_string(i) + ") = " + std::to_string(values_[i]) +
                                    " is outside the declared bounds [" + std::to_string(a) + "," +
                                    std::to_string(b) + "]");
      }
    }
    DegreeSpec out = *this;
    out.bounds_ = std::pair{a, b};
    return out;
  }

  int size() const { return static_cast<int>(values_.size()); }
  int operator[](int v) const { return values_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& values() const { return values_; }
  const std::optional<std::pair<int, int>>& bounds() const { return bounds_; }

  std::int64_t total() const { return std::accumulate(values_.begin(), values_.end(), std::int64_t{0}); }
  int min_value() const { return values_.empty() ? 0 : *std::min_element(values_.begin(), values_.end()); }
  int max_value() const { return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end()); }

  /// Throws unless the spec covers exactly the vertices of `g`.
  void check_against(const Graph& g) const {
    if (size() != g.order()) {
      throw std::invalid_argument("degree spec has " + std::to_string(size()) + " values for a graph on " +
                                  std::to_string(g.order()) + " vertices");
    }
  }

  friend bool operator==(const DegreeSpec& x, const DegreeSpec& y) { return x.values_ == y.values_; }

 private:
  std::vector<int> values_;
  std::optional<std::pair<int, int>> bounds_;
};

// ---------------------------------------------------------------------------
// Set and subgraph primitives

inline std::int64_t f_sum(const DegreeSpec& f, const VertexSet& set) {
  std::int64_t total = 0;
  for (int v : set) total += f[v];
  return total;
}

inline int degree(const Graph& g, int v) { return g.degree(v); }

inline int min_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = v == 0 ? g.degree(v) : std::min(best, g.degree(v));
  return best;
}

inline int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

inline void check_vertex_set(const Graph& g, const VertexSet& s) {
  if (!s.empty() && (s.items().front() < 0 || s.items().back() >= g.order())) {
    throw std::out_of_range("vertex set is not valid for a graph on " + std::to_string(g.order()) + " vertices");
  }
}

/// Induced subgraph G - S; `original[i]` is the original index of new vertex i.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> original;
};

inline InducedSubgraph remove_vertices(const Graph& g, const VertexSet& removed) {
  check_vertex_set(g, removed);
  const int n = g.order();
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  InducedSubgraph out;
  for (int v = 0; v < n; ++v) {
    if (!removed.contains(v)) {
      index[static_cast<std::size_t>(v)] = static_cast<int>(out.original.size());
      out.original.push_back(v);
    }
  }
  std::vector<std::vector<int>> adj(out.original.size());
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    for (int y : g.neighbors(out.original[i])) {
      if (const int j = index[static_cast<std::size_t>(y)]; j >= 0) adj[i].push_back(j);
    }
  }
  out.graph = Graph::from_adjacency(std::move(adj));
  return out;
}

namespace detail {

/// Component labelling of G minus a removed mask, reusing its buffers.
class ComponentLabeler {
 public:
  explicit ComponentLabeler(const Graph& g)
      : g_(g), label_(static_cast<std::size_t>(g.order()), -1) {
    stack_.reserve(static_cast<std::size_t>(g.order()));
  }

  /// Labels every vertex not in `removed`; removed vertices get -1. Returns the
  /// number of components. Labels follow the smallest contained index.
  int run(const std::vector<char>& removed) {
    std::fill(label_.begin(), label_.end(), -1);
    int count = 0;
    for (int s = 0; s < g_.order(); ++s) {
      if (removed[static_cast<std::size_t>(s)] || label_[static_cast<std::size_t>(s)] >= 0) continue;
      label_[static_cast<std::size_t>(s)] = count;
      stack_.clear();
      stack_.push_back(s);
      while (!stack_.empty()) {
        const int x = stack_.back();
        stack_.pop_back();
        for (int y : g_.neighbors(x)) {
          if (!removed[static_cast<std::size_t>(y)] && label_[static_cast<std::size_t>(y)] < 0) {
            label_[static_cast<std::size_t>(y)] = count;
            stack_.push_back(y);
          }
        }
      }
      ++count;
    }
    return count;
  }

  int label(int v) const { return label_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& labels() const { return label_; }

 private:
  const Graph& g_;
  std::vector<int> label_;
  std::vector<int> stack_;
};

inline std::vector<char> mask_of(const Graph& g, const VertexSet& s) {
  std::vector<char> mask(static_cast<std::size_t>(g.order()), 0);
  for (int v : s) mask[static_cast<std::size_t>(v)] = 1;
  return mask;
}

}  // namespace detail

/// Connected components ordered by smallest contained index.
inline std::vector<VertexSet> components(const Graph& g) {
  detail::ComponentLabeler labeler(g);
  const int count = labeler.run(std::vector<char>(static_cast<std::size_t>(g.order()), 0));
  std::vector<std::vector<int>> groups(static_cast<std::size_t>(count));
  for (int v = 0; v < g.order(); ++v) groups[static_cast<std::size_t>(labeler.label(v))].push_back(v);
  std::vector<VertexSet> out;
  out.reserve(groups.size());
  for (auto& grp : groups) out.emplace_back(std::move(grp));
  return out;
}

inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  detail::ComponentLabeler labeler(g);
  return labeler.run(std::vector<char>(static_cast<std::size_t>(g.order()), 0)) == 1;
}

/// e(A,B): edges with one endpoint in each of two disjoint sets.
inline std::int64_t edge_count_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  check_vertex_set(g, a);
  check_vertex_set(g, b);
  if (!a.disjoint_from(b)) throw std::invalid_argument("edge_count_between requires disjoint sets");
  std::int64_t count = 0;
  for (int x : a) {
    for (int y : g.neighbors(x)) count += b.contains(y) ? 1 : 0;
  }
  return count;
}

/// N_G(A): every vertex adjacent to some member of A.
inline VertexSet neighborhood_set(const Graph& g, const VertexSet& a) {
  check_vertex_set(g, a);
  std::vector<int> out;
  for (int x : a) out.insert(out.end(), g.neighbors(x).begin(), g.neighbors(x).end());
  return VertexSet(std::move(out));
}

/// True iff no vertex has `leaves` pairwise non-adjacent neighbours.
inline bool is_star_free(const Graph& g, int leaves) {
  if (leaves < 2) throw std::invalid_argument("is_star_free needs n >= 2");
  // Search for an independent set of the required size inside each neighbourhood.
  std::vector<int> chosen;
  auto extend = [&](auto&& self, std::span<const int> nbrs, std::size_t from) -> bool {
    if (static_cast<int>(chosen.size()) == leaves) return true;
    if (nbrs.size() - from < static_cast<std::size_t>(leaves) - chosen.size()) return false;
    for (std::size_t i = from; i < nbrs.size(); ++i) {
      const int cand = nbrs[i];
      if (std::none_of(chosen.begin(), chosen.end(), [&](int c) { return g.adjacent(c, cand); })) {
        chosen.push_back(cand);
        if (self(self, nbrs, i + 1)) return true;
        chosen.pop_back();
      }
    }
    return false;
  };
  for (int v = 0; v < g.order(); ++v) {
    chosen.clear();
    if (extend(extend, g.neighbors(v), 0)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Builders

inline Graph empty_graph(int n) { return Graph::from_edges(n, std::span<const Edge>{}); }

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) edges.push_back({x, y});
  return Graph::from_edges(n, edges);
}

inline Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int x = 0; x < n; ++x) edges.push_back(make_edge(x, (x + 1) % n));
  return Graph::from_edges(n, edges);
}

inline Graph path(int n) {
  std::vector<Edge> edges;
  for (int x = 0; x + 1 < n; ++x) edges.push_back({x, x + 1});
  return Graph::from_edges(n, edges);
}

/// Vertices of the first graph come first, then the second, and so on.
inline Graph disjoint_union(std::span<const Graph> parts) {
  std::vector<Edge> edges;
  int offset = 0;
  for (const Graph& part : parts) {
    for (const Edge& e : part.edges()) edges.push_back({e.u + offset, e.v + offset});
    offset += part.order();
  }
  return Graph::from_edges(offset, edges);
}

inline Graph disjoint_union(std::initializer_list<Graph> parts) {
  return disjoint_union(std::span<const Graph>(parts.begin(), parts.size()));
}

inline Graph join(const Graph& left, const Graph& right) {
  std::vector<Edge> edges = disjoint_union({left, right}).edges();
  const int n1 = left.order();
  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < right.order(); ++y) edges.push_back({x, n1 + y});
  return Graph::from_edges(n1 + right.order(), edges);
}

/// K_{1,leaves}; the centre is vertex 0.
inline Graph star(int leaves) { return join(complete_graph(1), empty_graph(leaves)); }

inline Graph complete_bipartite(int left, int right) { return join(empty_graph(left), empty_graph(right)); }

inline Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(make_edge(i, (i + 1) % 5));
    edges.push_back(make_edge(i, i + 5));
    edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
  }
  return Graph::from_edges(10, edges);
}

}  // namespace ffactor

#pragma once

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "ffactor/graph.hpp"
#include "ffactor/limits.hpp"
#include "ffactor/rational.hpp"

namespace ffactor {

struct IndependentSet {
  int size = 0;
  VertexSet witness;
};

namespace detail {

// Branch and bound for a maximum independent set. Vertices whose live
// neighbourhood is a clique are taken greedily; otherwise branch on a live
// vertex of maximum degree (smallest index on ties), include first. A greedy
// clique cover of the live vertices bounds each subtree.
class IndependentSetSolver {
 public:
  explicit IndependentSetSolver(const Graph& g) : g_(g) {}

  IndependentSet solve() {
    std::vector<char> alive(static_cast<std::size_t>(g_.order()), 1);
    search(alive);
    return {static_cast<int>(best_.size()), VertexSet(best_)};
  }

 private:
  bool simplicial(const std::vector<char>& alive, int v) const {
    scratch_.clear();
    for (int y : g_.neighbors(v)) {
      if (alive[static_cast<std::size_t>(y)]) scratch_.push_back(y);
    }
    for (std::size_t i = 0; i < scratch_.size(); ++i)
      for (std::size_t j = i + 1; j < scratch_.size(); ++j)
        if (!g_.adjacent(scratch_[i], scratch_[j])) return false;
    return true;
  }

  void take(std::vector<char>& alive, int v) {
    current_.push_back(v);
    alive[static_cast<std::size_t>(v)] = 0;
    for (int y : g_.neighbors(v)) alive[static_cast<std::size_t>(y)] = 0;
  }

  int clique_cover_size(const std::vector<char>& alive) const {
    std::vector<std::vector<int>> cliques;
    for (int v = 0; v < g_.order(); ++v) {
      if (!alive[static_cast<std::size_t>(v)]) continue;
      bool placed = false;
      for (auto& clique : cliques) {
        if (std::all_of(clique.begin(), clique.end(), [&](int c) { return g_.adjacent(c, v); })) {
          clique.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) cliques.push_back({v});
    }
    return static_cast<int>(cliques.size());
  }

  void search(std::vector<char> alive) {
    const std::size_t depth = current_.size();
    for (bool changed = true; changed;) {
      changed = false;
      for (int v = 0; v < g_.order(); ++v) {
        if (alive[static_cast<std::size_t>(v)] && simplicial(alive, v)) {
          take(alive, v);
          changed = true;
        }
      }
    }

    int pivot = -1;
    int pivot_degree = -1;
    for (int v = 0; v < g_.order(); ++v) {
      if (!alive[static_cast<std::size_t>(v)]) continue;
      int d = 0;
      for (int y : g_.neighbors(v)) d += alive[static_cast<std::size_t>(y)];
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }

    if (pivot < 0) {
      if (current_.size() > best_.size()) best_ = current_;
    } else if (current_.size() + static_cast<std::size_t>(clique_cover_size(alive)) > best_.size()) {
      std::vector<char> with = alive;
      current_.push_back(pivot);
      with[static_cast<std::size_t>(pivot)] = 0;
      for (int y : g_.neighbors(pivot)) with[static_cast<std::size_t>(y)] = 0;
      search(std::move(with));
      current_.pop_back();

      alive[static_cast<std::size_t>(pivot)] = 0;
      search(std::move(alive));
    }
    current_.resize(depth);
  }

  const Graph& g_;
  std::vector<int> current_;
  std::vector<int> best_;
  mutable std::vector<int> scratch_;
};

/// Unit vertex-capacity flow network over a graph, split as v_in = 2v, v_out = 2v+1.
class VertexSplitFlow {
 public:
  explicit VertexSplitFlow(const Graph& g) : g_(g) {}

  /// Number of internally vertex-disjoint s-t paths, stopping once `limit` is reached.
  int local_connectivity(int s, int t, int limit) {
    build(s, t);
    const int source = 2 * s + 1;
    const int sink = 2 * t;
    int flow = 0;
    std::vector<int> parent_edge(head_.size());
    while (flow < limit) {
      std::fill(parent_edge.begin(), parent_edge.end(), -1);
      std::deque<int> queue{source};
      parent_edge[static_cast<std::size_t>(source)] = -2;
      while (!queue.empty() && parent_edge[static_cast<std::size_t>(sink)] == -1) {
        const int x = queue.front();
        queue.pop_front();
        for (int e = head_[static_cast<std::size_t>(x)]; e >= 0; e = next_[static_cast<std::size_t>(e)]) {
          const int y = to_[static_cast<std::size_t>(e)];
          if (cap_[static_cast<std::size_t>(e)] > 0 && parent_edge[static_cast<std::size_t>(y)] == -1) {
            parent_edge[static_cast<std::size_t>(y)] = e;
            queue.push_back(y);
          }
        }
      }
      if (parent_edge[static_cast<std::size_t>(sink)] == -1) break;
      for (int y = sink; y != source;) {
        const int e = parent_edge[static_cast<std::size_t>(y)];
        --cap_[static_cast<std::size_t>(e)];
        ++cap_[static_cast<std::size_t>(e ^ 1)];
        y = to_[static_cast<std::size_t>(e ^ 1)];
      }
      ++flow;
    }
    return flow;
  }

 private:
  void add_arc(int x, int y, int c) {
    for (auto [from, to, cap] : {std::tuple{x, y, c}, std::tuple{y, x, 0}}) {
      to_.push_back(to);
      cap_.push_back(cap);
      next_.push_back(head_[static_cast<std::size_t>(from)]);
      head_[static_cast<std::size_t>(from)] = static_cast<int>(to_.size()) - 1;
    }
  }

  void build(int s, int t) {
    const int n = g_.order();
    head_.assign(static_cast<std::size_t>(2 * n), -1);
    to_.clear();
    cap_.clear();
    next_.clear();
    for (int v = 0; v < n; ++v) {
      if (v != s && v != t) add_arc(2 * v, 2 * v + 1, 1);
    }
    for (int x = 0; x < n; ++x) {
      for (int y : g_.neighbors(x)) add_arc(2 * x + 1, 2 * y, 1);
    }
  }

  const Graph& g_;
  std::vector<int> head_, to_, cap_, next_;
};

}  // namespace detail

/// α(G) with one maximum independent set.
inline IndependentSet stability_number(const Graph& g) { return detail::IndependentSetSolver(g).solve(); }

/// κ(G); n-1 for complete graphs, 0 for disconnected graphs.
inline int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;
  int best = min_degree(g);
  if (best == n - 1) return n - 1;
  detail::VertexSplitFlow flow(g);
  // Some vertex among the first best+1 lies outside every minimum separator.
  for (int i = 0; i < n && i <= best; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!g.adjacent(i, j)) best = std::min(best, flow.local_connectivity(i, j, best));
    }
  }
  return best;
}

/// h'(G-S): components C of G-S with f(C) odd.
inline int odd_component_count(const Graph& g, const VertexSet& s, const DegreeSpec& f) {
  check_vertex_set(g, s);
  f.check_against(g);
  detail::ComponentLabeler labeler(g);
  const int count = labeler.run(detail::mask_of(g, s));
  std::vector<std::int64_t> sums(static_cast<std::size_t>(count), 0);
  for (int v = 0; v < g.order(); ++v) {
    if (labeler.label(v) >= 0) sums[static_cast<std::size_t>(labeler.label(v))] += f[v];
  }
  return static_cast<int>(std::count_if(sums.begin(), sums.end(), [](std::int64_t x) { return x % 2 != 0; }));
}

/// Result of a cutset minimisation: the value and the cutset achieving it.
struct CutsetRatio {
  ToughnessValue value = ToughnessValue::infinity();
  VertexSet witness;   // empty when the value is infinite
  int counted = 0;     // components counted at the witness
};

namespace detail {

// Enumerates cutsets smallest first, minimising |S| / count(G-S) over cutsets
// with a positive count. `parity` selects the odd-f count instead of all
// components. Stops early once a ratio below `stop_below` is found.
inline CutsetRatio minimise_cutset_ratio(const Graph& g, const DegreeSpec* parity, const Limits& limits,
                                         std::optional<Rational> stop_below = std::nullopt) {
  const int n = g.order();
  if (!is_connected(g)) throw std::invalid_argument("toughness is defined for connected graphs only");
  if (n > limits.toughness_max_n) throw SizeCapError("toughness cap (n)", limits.toughness_max_n, n);

  // Components of G-S never outnumber α(G).
  const int alpha = stability_number(g).size;
  CutsetRatio best;
  ComponentLabeler labeler(g);
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> sums;

  for (int s = 1; s <= n - 2; ++s) {
    const int ceiling = std::min(alpha, n - s);
    if (ceiling < 1) break;
    if (!best.value.is_infinite() && Rational(s, ceiling) >= best.value.value()) break;

    std::vector<int> pick(static_cast<std::size_t>(s));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::fill(removed.begin(), removed.end(), 0);
      for (int v : pick) removed[static_cast<std::size_t>(v)] = 1;
      const int c = labeler.run(removed);
      if (c >= 2) {
        int counted = c;
        if (parity != nullptr) {
          sums.assign(static_cast<std::size_t>(c), 0);
          for (int v = 0; v < n; ++v) {
            if (labeler.label(v) >= 0) sums[static_cast<std::size_t>(labeler.label(v))] += (*parity)[v];
          }
          counted = static_cast<int>(std::count_if(sums.begin(), sums.end(), [](std::int64_t x) { return x % 2 != 0; }));
        }
        if (counted >= 1) {
          const Rational ratio(s, counted);
          if (best.value.is_infinite() || ratio < best.value.value()) {
            best = {ratio, VertexSet(pick), counted};
            if (stop_below && ratio < *stop_below) return best;
          }
        }
      }
      // next combination in lexicographic order
      int i = s - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - s + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < s; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return best;
}

}  // namespace detail

/// Odd-toughness of (G, f): min |S| / h'(G-S) over cutsets S with h'(G-S) >= 1.
/// Exact by enumeration; refuses graphs above limits.toughness_max_n.
inline CutsetRatio odd_toughness(const Graph& g, const DegreeSpec& f, const Limits& limits = {}) {
  f.check_against(g);
  return detail::minimise_cutset_ratio(g, &f, limits);
}

/// Classical toughness: min |S| / c(G-S) over cutsets S.
inline CutsetRatio toughness(const Graph& g, const Limits& limits = {}) {
  return detail::minimise_cutset_ratio(g, nullptr, limits);
}

/// True iff odd_toughness(G, f) >= t.
inline bool is_t_odd_tough(const Graph& g, const DegreeSpec& f, const Rational& t, const Limits& limits = {}) {
  if (t < Rational(0)) throw std::invalid_argument("toughness threshold must be nonnegative");
  f.check_against(g);
  if (!is_connected(g)) throw std::invalid_argument("odd-toughness is defined for connected graphs only");
  if (t == Rational(0)) return true;
  const CutsetRatio r = detail::minimise_cutset_ratio(g, &f, limits, t);
  return r.value >= ExtRational(t);
}

}  // namespace ffactor

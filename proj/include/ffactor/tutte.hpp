#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "ffactor/graph.hpp"
#include "ffactor/limits.hpp"

namespace ffactor {

/// Disjoint pair (S, T) fed to the deficiency formula.
struct SubsetPair {
  VertexSet s;
  VertexSet t;

  friend bool operator==(const SubsetPair&, const SubsetPair&) = default;
};

/// Every term of δ(S,T) = f(S) - f(T) + Σ_{v∈T} d_{G-S}(v) - h(S,T), plus the
/// diagnostics h2 (components of G-(S∪T) with no edge to T) and the flag
/// |S| > δ(G) - b when bounds are known.
struct DeficiencyReport {
  SubsetPair pair;
  std::int64_t f_s = 0;
  std::int64_t f_t = 0;
  std::int64_t degree_term = 0;
  int h = 0;
  std::int64_t delta = 0;
  int components = 0;
  int h2 = 0;
  bool h2_vacuous = false;         // T empty: every component counts
  std::optional<bool> prop_flag;   // set by analyze_pair

  bool violates() const { return delta < 0; }
};

inline void check_pair(const Graph& g, const SubsetPair& pair) {
  check_vertex_set(g, pair.s);
  check_vertex_set(g, pair.t);
  if (!pair.s.disjoint_from(pair.t)) throw std::invalid_argument("S and T must be disjoint");
}

namespace detail {

class DeficiencyEvaluator {
 public:
  DeficiencyEvaluator(const Graph& g, const DegreeSpec& f) : g_(g), f_(f), labeler_(g) {}

  /// `side[v]`: 0 neither, 1 in S, 2 in T.
  DeficiencyReport evaluate(const std::vector<char>& side) {
    const int n = g_.order();
    DeficiencyReport r;
    removed_.assign(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
      const char sd = side[static_cast<std::size_t>(v)];
      if (sd == 1) r.f_s += f_[v];
      if (sd == 2) {
        r.f_t += f_[v];
        for (int y : g_.neighbors(v)) r.degree_term += side[static_cast<std::size_t>(y)] != 1 ? 1 : 0;
      }
      removed_[static_cast<std::size_t>(v)] = sd != 0 ? 1 : 0;
    }
    r.components = labeler_.run(removed_);
    parity_.assign(static_cast<std::size_t>(r.components), 0);
    touches_t_.assign(static_cast<std::size_t>(r.components), 0);
    for (int v = 0; v < n; ++v) {
      const int c = labeler_.label(v);
      if (c < 0) continue;
      std::int64_t p = f_[v];
      for (int y : g_.neighbors(v)) {
        if (side[static_cast<std::size_t>(y)] == 2) {
          ++p;
          touches_t_[static_cast<std::size_t>(c)] = 1;
        }
      }
      parity_[static_cast<std::size_t>(c)] ^= static_cast<char>(p & 1);
    }
    for (int c = 0; c < r.components; ++c) {
      r.h += parity_[static_cast<std::size_t>(c)];
      r.h2 += touches_t_[static_cast<std::size_t>(c)] ? 0 : 1;
    }
    r.delta = r.f_s - r.f_t + r.degree_term - r.h;
    std::vector<int> s_items, t_items;
    for (int v = 0; v < n; ++v) {
      if (side[static_cast<std::size_t>(v)] == 1) s_items.push_back(v);
      if (side[static_cast<std::size_t>(v)] == 2) t_items.push_back(v);
    }
    r.pair = {VertexSet(std::move(s_items)), VertexSet(std::move(t_items))};
    r.h2_vacuous = r.pair.t.empty();
    return r;
  }

  DeficiencyReport evaluate(const SubsetPair& pair) {
    std::vector<char> side(static_cast<std::size_t>(g_.order()), 0);
    for (int v : pair.s) side[static_cast<std::size_t>(v)] = 1;
    for (int v : pair.t) side[static_cast<std::size_t>(v)] = 2;
    return evaluate(side);
  }

 private:
  const Graph& g_;
  const DegreeSpec& f_;
  ComponentLabeler labeler_;
  std::vector<char> removed_;
  std::vector<char> parity_;
  std::vector<char> touches_t_;
};

/// Strict order for certificates: smaller delta, then smaller |S|+|T|, then S, then T.
inline bool better_certificate(const DeficiencyReport& x, const DeficiencyReport& y) {
  if (x.delta != y.delta) return x.delta < y.delta;
  const auto sx = x.pair.s.size() + x.pair.t.size();
  const auto sy = y.pair.s.size() + y.pair.t.size();
  if (sx != sy) return sx < sy;
  if (x.pair.s != y.pair.s) return x.pair.s < y.pair.s;
  return x.pair.t < y.pair.t;
}

}  // namespace detail

/// h(S,T): components C of G-(S∪T) with f(C) + e(C,T) odd.
inline int odd_components_ST(const Graph& g, const SubsetPair& pair, const DegreeSpec& f) {
  check_pair(g, pair);
  f.check_against(g);
  return detail::DeficiencyEvaluator(g, f).evaluate(pair).h;
}

inline DeficiencyReport deficiency(const Graph& g, const SubsetPair& pair, const DegreeSpec& f) {
  check_pair(g, pair);
  f.check_against(g);
  return detail::DeficiencyEvaluator(g, f).evaluate(pair);
}

/// deficiency() plus the |S| > δ(G) - b flag; requires a <= f <= b.
inline DeficiencyReport analyze_pair(const Graph& g, const SubsetPair& pair, const DegreeSpec& f, int a, int b) {
  f.with_bounds(a, b);
  DeficiencyReport r = deficiency(g, pair, f);
  r.prop_flag = static_cast<int>(pair.s.size()) > min_degree(g) - b;
  return r;
}

enum class AuditMode { automatic, exact, structured };

struct AuditOptions {
  AuditMode mode = AuditMode::automatic;
  Limits limits{};
  std::uint64_t seed = 1;
  int random_restarts = 64;
};

struct AuditResult {
  std::optional<DeficiencyReport> violation;
  bool exhaustive = false;  // true: absence of a violation certifies an f-factor
};

namespace detail {

// Enumerates all 3^n side assignments with a running lower bound on delta.
inline std::optional<DeficiencyReport> exact_violating_pair(const Graph& g, const DegreeSpec& f) {
  const int n = g.order();
  if (n > 63) throw std::invalid_argument("exact audit supports at most 63 vertices");
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    for (int y : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << y;
  std::vector<std::int64_t> suffix_f(static_cast<std::size_t>(n) + 1, 0);
  for (int v = n - 1; v >= 0; --v) suffix_f[static_cast<std::size_t>(v)] = suffix_f[static_cast<std::size_t>(v) + 1] + f[v];
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  std::optional<DeficiencyReport> best;
  std::uint64_t s_mask = 0, t_mask = 0, neither_mask = 0;
  std::int64_t f_s = 0, f_t = 0, settled_degree = 0;

  auto leaf = [&]() {
    std::int64_t degree_term = 0;
    for (std::uint64_t rest = t_mask; rest != 0; rest &= rest - 1) {
      degree_term += std::popcount(adj[static_cast<std::size_t>(std::countr_zero(rest))] & ~s_mask);
    }
    int h = 0;
    for (std::uint64_t rest = all & ~(s_mask | t_mask); rest != 0;) {
      std::uint64_t comp = rest & (~rest + 1);
      std::uint64_t frontier = comp;
      while (frontier != 0) {
        std::uint64_t grow = 0;
        for (std::uint64_t fr = frontier; fr != 0; fr &= fr - 1) grow |= adj[static_cast<std::size_t>(std::countr_zero(fr))];
        grow &= rest & ~comp;
        comp |= grow;
        frontier = grow;
      }
      rest &= ~comp;
      std::int64_t parity = 0;
      for (std::uint64_t c = comp; c != 0; c &= c - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(c));
        parity += f[static_cast<int>(v)] + std::popcount(adj[v] & t_mask);
      }
      h += static_cast<int>(parity & 1);
    }
    const std::int64_t delta = f_s - f_t + degree_term - h;
    if (delta >= 0 || (best && delta > best->delta)) return;
    DeficiencyReport r;
    r.pair = {VertexSet::from_mask(s_mask), VertexSet::from_mask(t_mask)};
    r.delta = delta;
    if (!best || better_certificate(r, *best)) best = r;
  };

  auto search = [&](auto&& self, int v) -> void {
    if (v == n) {
      leaf();
      return;
    }
    // delta >= f(S) - f(T) + (T-to-neither edges so far) - f(undecided) - (vertices left outside S∪T)
    const std::int64_t bound = f_s - f_t + settled_degree - suffix_f[static_cast<std::size_t>(v)] -
                               (n - v) - std::popcount(neither_mask);
    if (bound > (best ? best->delta : -1)) return;
    const std::uint64_t bit = std::uint64_t{1} << v;
    const std::uint64_t nb = adj[static_cast<std::size_t>(v)];

    neither_mask |= bit;
    settled_degree += std::popcount(nb & t_mask);
    self(self, v + 1);
    settled_degree -= std::popcount(nb & t_mask);
    neither_mask &= ~bit;

    s_mask |= bit;
    f_s += f[v];
    self(self, v + 1);
    f_s -= f[v];
    s_mask &= ~bit;

    t_mask |= bit;
    f_t += f[v];
    settled_degree += std::popcount(nb & neither_mask);
    self(self, v + 1);
    settled_degree -= std::popcount(nb & neither_mask);
    f_t -= f[v];
    t_mask &= ~bit;
  };
  search(search, 0);

  if (best) best = DeficiencyEvaluator(g, f).evaluate(best->pair);
  return best;
}

// Evaluates structured candidate pairs and improves the best ones by local
// search. Every reported pair is evaluated exactly; absence proves nothing.
inline std::optional<DeficiencyReport> structured_violating_pair(const Graph& g, const DegreeSpec& f,
                                                                 const AuditOptions& options) {
  const int n = g.order();
  DeficiencyEvaluator eval(g, f);
  const double work = static_cast<double>(n) + static_cast<double>(g.size()) + 1.0;
  long budget = std::max<long>(4L * n + 2000, static_cast<long>(2.0e8 / work));

  std::vector<DeficiencyReport> pool;
  std::optional<DeficiencyReport> best;
  auto consider = [&](const std::vector<char>& side) {
    --budget;
    DeficiencyReport r = eval.evaluate(side);
    if (!best || better_certificate(r, *best)) best = r;
    return r;
  };
  auto try_s = [&](std::vector<char> side) {
    pool.push_back(consider(side));
    std::vector<char> with_t = side;
    bool any = false;
    for (int v = 0; v < n; ++v) {
      if (side[static_cast<std::size_t>(v)] == 1) continue;
      int d = 0;
      for (int y : g.neighbors(v)) d += side[static_cast<std::size_t>(y)] != 1 ? 1 : 0;
      if (d < f[v]) {
        with_t[static_cast<std::size_t>(v)] = 2;
        any = true;
      }
    }
    if (any) pool.push_back(consider(with_t));
  };

  std::vector<char> side(static_cast<std::size_t>(n), 0);
  try_s(side);
  for (int v = 0; v < n; ++v) {
    side.assign(static_cast<std::size_t>(n), 0);
    side[static_cast<std::size_t>(v)] = 1;
    try_s(side);
  }
  if (n <= 40) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        side.assign(static_cast<std::size_t>(n), 0);
        side[static_cast<std::size_t>(u)] = side[static_cast<std::size_t>(v)] = 1;
        try_s(side);
      }
  }
  for (int v = 0; v < n; ++v) {
    side.assign(static_cast<std::size_t>(n), 0);
    for (int y : g.neighbors(v)) side[static_cast<std::size_t>(y)] = 1;
    try_s(side);
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < options.random_restarts && budget > 0; ++i) {
    for (auto& sd : side) {
      const double u = unit(rng);
      sd = u < 0.1 ? 1 : (u < 0.3 ? 2 : 0);
    }
    pool.push_back(consider(side));
  }

  // First-improvement local search from the most promising starts.
  std::sort(pool.begin(), pool.end(), better_certificate);
  const std::size_t starts = std::min<std::size_t>(pool.size(), 8);
  for (std::size_t k = 0; k < starts && budget > 0; ++k) {
    side.assign(static_cast<std::size_t>(n), 0);
    for (int v : pool[k].pair.s) side[static_cast<std::size_t>(v)] = 1;
    for (int v : pool[k].pair.t) side[static_cast<std::size_t>(v)] = 2;
    std::int64_t current = pool[k].delta;
    for (bool improved = true; improved && budget > 0;) {
      improved = false;
      for (int v = 0; v < n && budget > 0; ++v) {
        const char original = side[static_cast<std::size_t>(v)];
        for (char alt = 0; alt < 3 && budget > 0; ++alt) {
          if (alt == original) continue;
          side[static_cast<std::size_t>(v)] = alt;
          if (const std::int64_t d = consider(side).delta; d < current) {
            current = d;
            improved = true;
            break;
          }
          side[static_cast<std::size_t>(v)] = original;
        }
      }
    }
  }

  if (best && best->delta < 0) return best;
  return std::nullopt;
}

}  // namespace detail

/// Searches for a pair with δ(S,T) < 0, returning the one with minimum delta
/// (ties: smaller |S|+|T|, then S, then T). Exact mode enumerates 3^n pairs and
/// is capped at limits.exact_audit_max_n; automatic mode falls back to the
/// structured search above the cap.
inline AuditResult find_violating_pair(const Graph& g, const DegreeSpec& f, const AuditOptions& options = {}) {
  f.check_against(g);
  const bool within_cap = g.order() <= options.limits.exact_audit_max_n;
  if (options.mode == AuditMode::exact && !within_cap) {
    throw SizeCapError("exact audit cap (n)", options.limits.exact_audit_max_n, g.order());
  }
  if (options.mode == AuditMode::exact || (options.mode == AuditMode::automatic && within_cap)) {
    return {detail::exact_violating_pair(g, f), true};
  }
  return {detail::structured_violating_pair(g, f, options), false};
}

}  // namespace ffactor

#pragma once

#include <numeric>
#include <vector>

#include "ffactor/graph.hpp"

namespace ffactor {

namespace detail {

// Edmonds' blossom algorithm with union-find blossom bases. Each search grows
// an alternating tree from one free vertex in BFS order and contracts odd
// cycles on the fly.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(g),
        n_(g.order()),
        mate_(static_cast<std::size_t>(n_), -1),
        pred_(static_cast<std::size_t>(n_), -1),
        base_(static_cast<std::size_t>(n_)),
        state_(static_cast<std::size_t>(n_), kUnreached),
        stamp_(static_cast<std::size_t>(n_), 0) {
    queue_.reserve(static_cast<std::size_t>(n_));
  }

  /// Matches each vertex, in index order, to its first free neighbour.
  void greedy_init() {
    for (int x = 0; x < n_; ++x) {
      if (mate(x) != -1) continue;
      for (int y : g_.neighbors(x)) {
        if (mate(y) == -1) {
          set_mate(x, y);
          break;
        }
      }
    }
  }

  void set_mate(int x, int y) {
    mate_[idx(x)] = y;
    mate_[idx(y)] = x;
  }

  int mate(int v) const { return mate_[idx(v)]; }

  /// Augments from every free vertex. With `stop_on_failure`, returns false at
  /// the first free vertex that has no augmenting path; that vertex stays
  /// unmatched in every maximum matching, so no perfect matching exists.
  bool augment_all(bool stop_on_failure) {
    bool all = true;
    for (int r = 0; r < n_; ++r) {
      if (mate(r) == -1 && !augment_from(r)) {
        all = false;
        if (stop_on_failure) return false;
      }
    }
    return all;
  }

  std::vector<Edge> matching() const {
    std::vector<Edge> out;
    for (int x = 0; x < n_; ++x) {
      if (mate(x) > x) out.push_back({x, mate(x)});
    }
    return out;
  }

 private:
  static constexpr int kUnreached = -1;
  static constexpr int kEven = 0;
  static constexpr int kOdd = 1;

  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

  int find(int x) {
    while (base_[idx(x)] != x) {
      base_[idx(x)] = base_[idx(base_[idx(x)])];
      x = base_[idx(x)];
    }
    return x;
  }

  int lowest_common_base(int x, int y) {
    ++clock_;
    while (true) {
      if (x != -1) {
        x = find(x);
        if (stamp_[idx(x)] == clock_) return x;
        stamp_[idx(x)] = clock_;
        x = mate(x) == -1 ? -1 : pred_[idx(mate(x))];
      }
      std::swap(x, y);
    }
  }

  void contract(int x, int y, int top) {
    while (find(x) != top) {
      pred_[idx(x)] = y;
      y = mate(x);
      if (state_[idx(y)] == kOdd) {
        state_[idx(y)] = kEven;
        queue_.push_back(y);
      }
      if (base_[idx(x)] == x) base_[idx(x)] = top;
      if (base_[idx(y)] == y) base_[idx(y)] = top;
      x = pred_[idx(y)];
    }
  }

  bool augment_from(int root) {
    std::iota(base_.begin(), base_.end(), 0);
    std::fill(state_.begin(), state_.end(), kUnreached);
    queue_.clear();
    queue_.push_back(root);
    state_[idx(root)] = kEven;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const int x = queue_[head];
      for (int y : g_.neighbors(x)) {
        if (state_[idx(y)] == kUnreached) {
          pred_[idx(y)] = x;
          state_[idx(y)] = kOdd;
          if (mate(y) == -1) {
            for (int v = y; v != -1;) {
              const int u = pred_[idx(v)];
              const int next = mate(u);
              set_mate(u, v);
              v = next;
            }
            return true;
          }
          state_[idx(mate(y))] = kEven;
          queue_.push_back(mate(y));
        } else if (state_[idx(y)] == kEven && find(x) != find(y)) {
          const int top = lowest_common_base(x, y);
          contract(x, y, top);
          contract(y, x, top);
        }
      }
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<int> mate_, pred_, base_, state_, stamp_;
  std::vector<int> queue_;
  int clock_ = 0;
};

}  // namespace detail

/// Maximum-cardinality matching of a general graph, as edges with u < v.
inline std::vector<Edge> maximum_matching(const Graph& g) {
  detail::BlossomMatcher matcher(g);
  matcher.greedy_init();
  matcher.augment_all(false);
  return matcher.matching();
}

}  // namespace ffactor

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "patterncount/core.hpp"
#include "patterncount/int128.hpp"
#include "patterncount/sum_tree.hpp"
#include "patterncount/trees.hpp"

namespace patterncount {

// X[i] for vertex v: placements of v's subtree with v at position i.
template <class T>
std::vector<T> vertex_profile(const Permutation& p, const CornerTree& ct, int v);

// Z[i] for the edge above `child`: placements of child's subtree given its parent at position i.
template <class T>
std::vector<T> edge_profile(const Permutation& p, const CornerTree& ct, int child);

template <class T>
T count_corner_tree(const Permutation& p, const CornerTree& ct);

inline constexpr std::uint64_t kDefaultMorphismBudget = 200'000'000;

// |Mor(d, perm_to_dp(p))| by depth-first search.
std::uint64_t naive_morphism_count(const DoublePoset& d, const Permutation& p,
                                   std::uint64_t budget = kDefaultMorphismBudget);

// Streaming evaluation of an all-West corner tree over points fed left to right.
// The edge Fenwick trees are interleaved so one update or query walks a single array.
template <class T>
class StreamWestCounter {
 public:
  StreamWestCounter(const CornerTree& tree, std::size_t n)
      : tree_(tree), n_(n), cap_(n), order_(tree.post_order()), slot_(tree.size(), -1), value_(tree.size()) {
    if (!tree.all_west()) fail(ErrorCode::NotWestTree, "streaming counter needs NW/SW labels only");
    for (int v = 0; v < tree.size(); ++v) {
      if (v != tree.root()) slot_[v] = static_cast<int>(k_++);
    }
    fen_.assign((n_ + 1) * k_, T{});
    total_.assign(k_, T{});
  }

  // Returns the number of occurrences with the root at (x, y) and every other vertex
  // at a previously processed point.
  T process(std::size_t x, std::size_t y) {
    if (started_ && x <= last_x_) {
      fail(ErrorCode::OrderViolation, "points must be fed in increasing position order");
    }
    if (x >= n_ || y >= cap_) fail(ErrorCode::IndexError, "point outside the counter capacity");
    started_ = true;
    last_x_ = x;
    for (int v : order_) {
      T val{1};
      for (int c : tree_.children(v)) {
        const std::size_t e = static_cast<std::size_t>(slot_[c]);
        const T w = value_[c];
        total_[e] += w;
        for (std::size_t k = y + 1; k <= cap_; k += k & (~k + 1)) fen_[k * k_ + e] += w;
        // SW: points strictly below y; NW: points strictly above y
        const bool sw = tree_.label(c) == CornerLabel::SW;
        T acc{};
        for (std::size_t k = sw ? y : y + 1; k > 0; k &= k - 1) acc += fen_[k * k_ + e];
        val *= sw ? acc : total_[e] - acc;
      }
      value_[v] = val;
    }
    return value_[tree_.root()];
  }

  // Clears all points; later values must lie below value_limit.
  void reset(std::size_t value_limit) {
    if (value_limit > n_) fail(ErrorCode::IndexError, "value limit exceeds the counter capacity");
    std::fill(fen_.begin(), fen_.begin() + static_cast<std::ptrdiff_t>((cap_ + 1) * k_), T{});
    cap_ = value_limit;
    std::fill(total_.begin(), total_.end(), T{});
    started_ = false;
  }
  void reset() { reset(n_); }

  const CornerTree& tree() const { return tree_; }

 private:
  CornerTree tree_;
  std::size_t n_;
  std::size_t cap_;
  std::vector<int> order_;
  std::vector<int> slot_;
  std::size_t k_ = 0;
  std::vector<T> fen_;
  std::vector<T> total_;
  std::vector<T> value_;
  bool started_ = false;
  std::size_t last_x_ = 0;
};

template <class T>
T count_all_west(const Permutation& p, const CornerTree& tree);

// Applies the 128-bit headroom rule for Int128; no-op for big integers.
template <class T>
void require_headroom(std::size_t vertices, std::size_t n) {
  if constexpr (std::is_same_v<T, Int128>) require_int128_headroom(vertices, n);
}

}  // namespace patterncount

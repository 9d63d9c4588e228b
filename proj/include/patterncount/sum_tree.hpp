#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "patterncount/errors.hpp"

namespace patterncount {

// Binary indexed tree over leaves 1..n. prefix_sum and suffix_sum exclude the query index.
template <class T>
class SumTree {
 public:
  explicit SumTree(std::size_t n = 0) : n_(n), tree_(n + 1), leaf_(n + 1) {}

  std::size_t capacity() const { return n_; }

  void add(std::size_t idx, const T& w) {
    check(idx);
    leaf_[idx] += w;
    total_ += w;
    for (std::size_t k = idx; k <= n_; k += k & (~k + 1)) tree_[k] += w;
  }

  T prefix_sum(std::size_t k) const {
    check(k);
    return prefix_upto(k - 1);
  }

  T suffix_sum(std::size_t k) const {
    check(k);
    return total_ - prefix_upto(k);
  }

  const T& value_at(std::size_t k) const {
    check(k);
    return leaf_[k];
  }

  const T& total() const { return total_; }

  void clear() {
    for (auto& v : tree_) v = T{};
    for (auto& v : leaf_) v = T{};
    total_ = T{};
  }

 private:
  // sum of leaves 1..k
  T prefix_upto(std::size_t k) const {
    T s{};
    for (; k > 0; k &= k - 1) s += tree_[k];
    return s;
  }

  void check(std::size_t idx) const {
    if (idx < 1 || idx > n_) {
      fail(ErrorCode::IndexError,
           "sum-tree index " + std::to_string(idx) + " outside 1.." + std::to_string(n_));
    }
  }

  std::size_t n_;
  std::vector<T> tree_;
  std::vector<T> leaf_;
  T total_{};
};

}  // namespace patterncount

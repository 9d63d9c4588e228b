#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "patterncount/errors.hpp"

namespace patterncount {

// Offline 2-D prefix-sum structure for point sets with at most one point per column.
// column_values[x] is the y of the point that may later be added in column x, or -1.
// Outer Fenwick tree over x, each node holding a Fenwick tree over its sorted y values.
template <class T>
class ProductTree {
 public:
  ProductTree(std::size_t n, std::span<const int> column_values)
      : n_(n), layout_(column_values.begin(), column_values.end()), used_(n, 0), offset_(n + 2, 0) {
    if (column_values.size() != n) fail(ErrorCode::InvalidInput, "column layout has wrong length");
    for (int y : layout_) {
      if (y < -1 || y >= static_cast<int>(n)) fail(ErrorCode::IndexError, "layout value out of range");
    }
    for (std::size_t k = 1; k <= n_; ++k) {
      std::size_t lo = k - (k & (~k + 1));
      std::size_t cnt = 0;
      for (std::size_t x = lo; x < k; ++x) cnt += layout_[x] >= 0;
      offset_[k + 1] = offset_[k] + cnt;
    }
    ys_.resize(offset_[n_ + 1]);
    fen_.assign(offset_[n_ + 1], T{});
    for (std::size_t k = 1; k <= n_; ++k) {
      std::size_t lo = k - (k & (~k + 1));
      std::size_t at = offset_[k];
      for (std::size_t x = lo; x < k; ++x) {
        if (layout_[x] >= 0) ys_[at++] = layout_[x];
      }
      std::sort(ys_.begin() + offset_[k], ys_.begin() + offset_[k + 1]);
    }
  }

  std::size_t capacity() const { return n_; }

  void add(std::size_t x, std::size_t y, const T& w) {
    if (x >= n_ || y >= n_) fail(ErrorCode::IndexError, "point outside the product-tree square");
    if (layout_[x] != static_cast<int>(y)) {
      fail(ErrorCode::InvalidInput, "point (" + std::to_string(x) + "," + std::to_string(y) +
                                        ") is not in the column layout");
    }
    if (used_[x]) fail(ErrorCode::DuplicateColumn, "column " + std::to_string(x) + " already used");
    used_[x] = 1;
    total_ += w;
    for (std::size_t k = x + 1; k <= n_; k += k & (~k + 1)) {
      const int* seg = ys_.data() + offset_[k];
      std::size_t len = offset_[k + 1] - offset_[k];
      std::size_t pos = static_cast<std::size_t>(std::lower_bound(seg, seg + len, static_cast<int>(y)) - seg);
      T* f = fen_.data() + offset_[k];
      for (std::size_t i = pos + 1; i <= len; i += i & (~i + 1)) f[i - 1] += w;
    }
  }

  // Sum of weights with x_lo <= x < x_hi and y_lo <= y < y_hi.
  T sum_box(std::size_t x_lo, std::size_t x_hi, std::size_t y_lo, std::size_t y_hi) const {
    if (x_lo > x_hi || x_hi > n_ || y_lo > y_hi || y_hi > n_) {
      fail(ErrorCode::IndexError, "malformed box bounds");
    }
    if (x_lo == x_hi || y_lo == y_hi) return T{};
    T s{};
    accumulate(x_hi, static_cast<int>(y_lo), static_cast<int>(y_hi), s, true);
    accumulate(x_lo, static_cast<int>(y_lo), static_cast<int>(y_hi), s, false);
    return s;
  }

  // Sum of weights with x < x_hi and y < y_hi.
  T dominance(std::size_t x_hi, std::size_t y_hi) const {
    if (x_hi > n_ || y_hi > n_) fail(ErrorCode::IndexError, "malformed dominance bounds");
    T s{};
    for (std::size_t k = x_hi; k > 0; k &= k - 1) {
      const int* seg = ys_.data() + offset_[k];
      const std::size_t len = offset_[k + 1] - offset_[k];
      std::size_t b = static_cast<std::size_t>(std::lower_bound(seg, seg + len, static_cast<int>(y_hi)) - seg);
      const T* f = fen_.data() + offset_[k];
      for (; b > 0; b &= b - 1) s += f[b - 1];
    }
    return s;
  }

  const T& total() const { return total_; }

 private:
  // Adds (or subtracts) the weight of points with x < xe and y_lo <= y < y_hi.
  void accumulate(std::size_t xe, int y_lo, int y_hi, T& s, bool plus) const {
    for (std::size_t k = xe; k > 0; k &= k - 1) {
      const int* seg = ys_.data() + offset_[k];
      std::size_t len = offset_[k + 1] - offset_[k];
      std::size_t a = static_cast<std::size_t>(std::lower_bound(seg, seg + len, y_lo) - seg);
      std::size_t b = static_cast<std::size_t>(std::lower_bound(seg + a, seg + len, y_hi) - seg);
      if (a == b) continue;
      const T* f = fen_.data() + offset_[k];
      // prefix(b) - prefix(a); paths share a common tail that cancels
      while (a != b) {
        if (b > a) {
          if (plus) s += f[b - 1]; else s -= f[b - 1];
          b &= b - 1;
        } else {
          if (plus) s -= f[a - 1]; else s += f[a - 1];
          a &= a - 1;
        }
      }
    }
  }

  std::size_t n_;
  std::vector<int> layout_;
  std::vector<char> used_;
  std::vector<std::size_t> offset_;
  std::vector<int> ys_;
  std::vector<T> fen_;
  T total_{};
};

}  // namespace patterncount

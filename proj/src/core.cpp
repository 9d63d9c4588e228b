#include "patterncount/core.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

#include "patterncount/errors.hpp"

namespace patterncount {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > n || seen[v]) {
      fail(ErrorCode::InvalidInput, "not a permutation of 1.." + std::to_string(n));
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) inv[values_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::reverse_complement() const {
  const int n = static_cast<int>(values_.size());
  std::vector<int> rc(n);
  for (int i = 0; i < n; ++i) rc[i] = n + 1 - values_[n - 1 - i];
  return Permutation(std::move(rc));
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s.push_back(' ');
    s += std::to_string(values_[i]);
  }
  return s;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return std::lexicographical_compare_three_way(a.values_.begin(), a.values_.end(),
                                                b.values_.begin(), b.values_.end());
}

Permutation standardize(std::span<const int> window) {
  std::vector<int> idx(window.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return window[a] < window[b]; });
  std::vector<int> out(window.size());
  for (std::size_t r = 0; r < idx.size(); ++r) {
    if (r > 0 && window[idx[r]] == window[idx[r - 1]]) {
      fail(ErrorCode::InvalidInput, "window has duplicate entries");
    }
    out[idx[r]] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(out));
}

namespace {

void pattern_dfs(std::span<const int> big, std::span<const int> pat, std::size_t start,
                 std::vector<int>& chosen, std::uint64_t& count) {
  const std::size_t t = chosen.size();
  if (t == pat.size()) {
    ++count;
    return;
  }
  const std::size_t remaining = pat.size() - t;
  for (std::size_t i = start; i + remaining <= big.size(); ++i) {
    const int v = big[i];
    bool ok = true;
    for (std::size_t s = 0; s < t && ok; ++s) ok = (v > chosen[s]) == (pat[t] > pat[s]);
    if (!ok) continue;
    chosen.push_back(v);
    pattern_dfs(big, pat, i + 1, chosen, count);
    chosen.pop_back();
  }
}

}  // namespace

std::uint64_t naive_pattern_count(const Permutation& big, const Permutation& pattern) {
  if (pattern.size() > big.size()) return 0;
  std::uint64_t count = 0;
  std::vector<int> chosen;
  chosen.reserve(pattern.size());
  pattern_dfs(big.values(), pattern.values(), 0, chosen, count);
  return count;
}

StrictPoset::StrictPoset(int n) : n_(n), succ_(n, 0) {
  if (n < 0 || n > 64) fail(ErrorCode::TooLarge, "posets are limited to 64 elements");
}

StrictPoset StrictPoset::from_relation(int n, std::span<const std::pair<int, int>> relation) {
  StrictPoset p(n);
  for (auto [i, j] : relation) {
    if (i < 0 || j < 0 || i >= n || j >= n) {
      fail(ErrorCode::InvalidInput, "relation pair (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") outside 0.." + std::to_string(n - 1));
    }
    p.succ_[i] |= std::uint64_t{1} << j;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if ((p.succ_[i] >> k) & 1u) p.succ_[i] |= p.succ_[k];
    }
  }
  for (int i = 0; i < n; ++i) {
    if ((p.succ_[i] >> i) & 1u) fail(ErrorCode::NotAcyclic, "relation contains a cycle through " + std::to_string(i));
  }
  return p;
}

StrictPoset StrictPoset::chain(std::span<const int> order) {
  StrictPoset p(static_cast<int>(order.size()));
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = a + 1; b < order.size(); ++b) p.succ_[order[a]] |= std::uint64_t{1} << order[b];
  }
  return p;
}

std::uint64_t StrictPoset::predecessors(int j) const {
  std::uint64_t m = 0;
  for (int i = 0; i < n_; ++i) {
    if (less(i, j)) m |= std::uint64_t{1} << i;
  }
  return m;
}

std::vector<std::pair<int, int>> StrictPoset::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (less(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> StrictPoset::covers() const {
  std::vector<std::uint64_t> pred(n_);
  for (int j = 0; j < n_; ++j) pred[j] = predecessors(j);
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (less(i, j) && (succ_[i] & pred[j]) == 0) out.emplace_back(i, j);
    }
  }
  return out;
}

std::size_t StrictPoset::relation_size() const {
  std::size_t c = 0;
  for (auto s : succ_) c += static_cast<std::size_t>(std::popcount(s));
  return c;
}

bool StrictPoset::is_total() const {
  return relation_size() == static_cast<std::size_t>(n_) * (n_ - 1) / 2;
}

StrictPoset StrictPoset::opposite() const {
  StrictPoset p(n_);
  for (int i = 0; i < n_; ++i) p.succ_[i] = predecessors(i);
  return p;
}

StrictPoset StrictPoset::relabeled(std::span<const int> to) const {
  StrictPoset p(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (less(i, j)) p.succ_[to[i]] |= std::uint64_t{1} << to[j];
    }
  }
  return p;
}

StrictPoset StrictPoset::restricted(std::span<const int> keep) const {
  const int k = static_cast<int>(keep.size());
  StrictPoset p(k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (less(keep[a], keep[b])) p.succ_[a] |= std::uint64_t{1} << b;
    }
  }
  return p;
}

StrictPoset transitive_closure(int n, std::span<const std::pair<int, int>> relation) {
  return StrictPoset::from_relation(n, relation);
}

std::vector<std::pair<int, int>> transitive_reduction(const StrictPoset& p) { return p.covers(); }

DoublePoset::DoublePoset(StrictPoset w, StrictPoset s) : west(std::move(w)), south(std::move(s)) {
  if (west.size() != south.size()) fail(ErrorCode::InvalidInput, "west and south sizes differ");
}

DoublePoset DoublePoset::relabeled(std::span<const int> to) const {
  return {west.relabeled(to), south.relabeled(to)};
}

DoublePoset DoublePoset::restricted(std::span<const int> keep) const {
  return {west.restricted(keep), south.restricted(keep)};
}

DoublePoset perm_to_dp(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  std::vector<int> west(n);
  std::iota(west.begin(), west.end(), 0);
  std::vector<int> south(n);
  for (int i = 0; i < n; ++i) south[p[i] - 1] = i;
  return {StrictPoset::chain(west), StrictPoset::chain(south)};
}

Permutation dp_to_perm(const DoublePoset& d) {
  if (!d.west.is_total() || !d.south.is_total()) {
    fail(ErrorCode::NotAPermutationPoset, "orders are not both total");
  }
  const int n = d.size();
  // rank in an order = number of predecessors
  std::vector<int> wrank(n), srank(n);
  for (int i = 0; i < n; ++i) {
    wrank[i] = std::popcount(d.west.predecessors(i));
    srank[i] = std::popcount(d.south.predecessors(i));
  }
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[wrank[i]] = srank[i] + 1;
  return Permutation(std::move(v));
}

namespace {

std::set<std::pair<int, int>> undirected_hasse(const StrictPoset& p) {
  std::set<std::pair<int, int>> e;
  for (auto [i, j] : p.covers()) e.emplace(std::min(i, j), std::max(i, j));
  return e;
}

bool is_tree_graph(int n, const std::set<std::pair<int, int>>& edges) {
  if (n == 0 || edges.size() != static_cast<std::size_t>(n - 1)) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : edges) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

}  // namespace

DPClass classify(const DoublePoset& d) {
  auto hw = undirected_hasse(d.west);
  auto hs = undirected_hasse(d.south);
  DPClass c;
  c.twin = hw == hs;
  c.tree = is_tree_graph(d.size(), hw) && is_tree_graph(d.size(), hs);
  c.twin_tree = c.twin && c.tree;
  c.permutation = d.west.is_total() && d.south.is_total();
  return c;
}

namespace {

std::uint64_t encode(const StrictPoset& p, std::span<const int> to) {
  const int n = p.size();
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i) {
    std::uint64_t s = p.successors(i);
    while (s) {
      int j = std::countr_zero(s);
      s &= s - 1;
      bits |= std::uint64_t{1} << (to[i] * n + to[j]);
    }
  }
  return bits;
}

}  // namespace

CanonicalForm canonical_form(const DoublePoset& d) {
  const int n = d.size();
  if (n > kMaxCanonicalSize) {
    fail(ErrorCode::TooLargeForCanonicalization, "canonical forms are limited to " +
                                                     std::to_string(kMaxCanonicalSize) + " elements");
  }
  std::vector<int> to(n);
  std::iota(to.begin(), to.end(), 0);
  CanonicalForm best{n, ~std::uint64_t{0}, ~std::uint64_t{0}};
  do {
    std::uint64_t w = encode(d.west, to);
    if (w > best.west) continue;
    std::uint64_t s = encode(d.south, to);
    if (w < best.west || s < best.south) {
      best.west = w;
      best.south = s;
    }
  } while (std::next_permutation(to.begin(), to.end()));
  if (n == 0) best = {0, 0, 0};
  return best;
}

DoublePoset from_canonical(const CanonicalForm& c) {
  const int n = c.n;
  std::vector<std::pair<int, int>> w, s;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if ((c.west >> (i * n + j)) & 1u) w.emplace_back(i, j);
      if ((c.south >> (i * n + j)) & 1u) s.emplace_back(i, j);
    }
  }
  return {StrictPoset::from_relation(n, w), StrictPoset::from_relation(n, s)};
}

bool isomorphic(const DoublePoset& a, const DoublePoset& b) {
  if (a.size() != b.size()) return false;
  if (a.west.relation_size() != b.west.relation_size() ||
      a.south.relation_size() != b.south.relation_size()) {
    return false;
  }
  return canonical_form(a) == canonical_form(b);
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace patterncount

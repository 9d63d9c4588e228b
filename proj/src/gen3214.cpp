#include "patterncount/gen3214.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <set>
#include <thread>

#include "patterncount/counting.hpp"
#include "patterncount/errors.hpp"
#include "patterncount/product_tree.hpp"

namespace patterncount {

std::string to_string(ArboViolation v) {
  switch (v) {
    case ArboViolation::None: return "None";
    case ArboViolation::NoGlobalMax: return "NoGlobalMax";
    case ArboViolation::RestrictionNotTwinTree: return "RestrictionNotTwinTree";
    case ArboViolation::BadSpine: return "BadSpine";
    case ArboViolation::BadDangleOrientation: return "BadDangleOrientation";
    case ArboViolation::ClosureMismatch: return "ClosureMismatch";
  }
  return "?";
}

namespace {

ArboReport violation(ArboViolation v, std::string detail) { return {v, std::move(detail)}; }

std::vector<std::vector<int>> hasse_adjacency(const StrictPoset& p) {
  std::vector<std::vector<int>> adj(p.size());
  for (auto [u, v] : p.covers()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

bool adjacent(const std::vector<std::vector<int>>& adj, int u, int v) {
  return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
}

// Nodes reachable from `start` without stepping onto `blocked`.
std::vector<int> component(const std::vector<std::vector<int>>& adj, int start, const std::set<int>& blocked) {
  std::vector<int> out{start};
  std::set<int> seen{start};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int w : adj[out[i]]) {
      if (blocked.count(w) || seen.count(w)) continue;
      seen.insert(w);
      out.push_back(w);
    }
  }
  return out;
}

}  // namespace

ArboReport check_arbo(const DoublePoset& dp, const ArboAnchors& an) {
  const int n = dp.size();
  auto in_range = [&](int v) { return v >= 0 && v < n; };
  if (!in_range(an.four)) return violation(ArboViolation::NoGlobalMax, "four is not an element");
  for (int v = 0; v < n; ++v) {
    if (v == an.four) continue;
    if (!dp.west.less(v, an.four) || !dp.south.less(v, an.four)) {
      return violation(ArboViolation::NoGlobalMax,
                       "element " + std::to_string(v) + " is not below four in both orders");
    }
  }
  std::vector<int> spine{an.one, an.three};
  if (an.two) spine.push_back(*an.two);
  for (int v : spine) {
    if (!in_range(v) || v == an.four) return violation(ArboViolation::BadSpine, "spine anchor out of range");
  }
  if (std::set<int>(spine.begin(), spine.end()).size() != spine.size()) {
    return violation(ArboViolation::BadSpine, "spine anchors are not distinct");
  }
  std::vector<int> keep, index(n, -1);
  for (int v = 0; v < n; ++v) {
    if (v != an.four) {
      index[v] = static_cast<int>(keep.size());
      keep.push_back(v);
    }
  }
  const DoublePoset t = dp.restricted(keep);
  if (!classify(t).twin_tree) {
    return violation(ArboViolation::RestrictionNotTwinTree, "the elements below four do not form a twin tree");
  }
  const int t1 = index[an.one], t3 = index[an.three];
  const int t2 = an.two ? index[*an.two] : -1;
  for (int v = 0; v < t.size(); ++v) {
    if (v != t3 && !t.west.less(v, t3)) return violation(ArboViolation::BadSpine, "three is not the west maximum");
    if (v != t1 && !t.south.less(v, t1)) return violation(ArboViolation::BadSpine, "one is not the south maximum");
  }
  const auto adj = hasse_adjacency(t.west);
  if (t2 >= 0) {
    if (!adjacent(adj, t1, t2) || !adjacent(adj, t2, t3)) {
      return violation(ArboViolation::BadSpine, "spine is not the path one-two-three");
    }
    if (!t.west.less(t1, t2) || !t.west.less(t2, t3) || !t.south.less(t3, t2) || !t.south.less(t2, t1)) {
      return violation(ArboViolation::BadSpine, "spine relations are not those of 321");
    }
  } else {
    if (!adjacent(adj, t1, t3)) return violation(ArboViolation::BadSpine, "one and three are not adjacent");
    if (!t.west.less(t1, t3) || !t.south.less(t3, t1)) {
      return violation(ArboViolation::BadSpine, "spine relations are not those of 21");
    }
  }
  std::vector<int> parent(t.size(), -2);
  std::vector<int> queue;
  for (int v : {t1, t2, t3}) {
    if (v >= 0) {
      parent[v] = -1;
      queue.push_back(v);
    }
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int p = queue[i];
    for (int c : adj[p]) {
      if (parent[c] != -2) continue;
      parent[c] = p;
      queue.push_back(c);
      if (!t.west.less(c, p) || !t.south.less(c, p)) {
        return violation(ArboViolation::BadDangleOrientation,
                         "dangle element " + std::to_string(keep[c]) + " is not south-west of its parent " +
                             std::to_string(keep[p]));
      }
    }
  }
  auto expected = [&](const StrictPoset& tp) {
    std::vector<std::pair<int, int>> rel;
    for (auto [u, v] : tp.pairs()) rel.emplace_back(keep[u], keep[v]);
    for (int v : keep) rel.emplace_back(v, an.four);
    return StrictPoset::from_relation(n, rel);
  };
  if (!(expected(t.west) == dp.west) || !(expected(t.south) == dp.south)) {
    return violation(ArboViolation::ClosureMismatch, "orders are not generated by the tree and four");
  }
  return {};
}

ArboNE ArboNE::validate(const DoublePoset& dp, const ArboAnchors& anchors) {
  ArboReport r = check_arbo(dp, anchors);
  if (!r.ok()) fail(ErrorCode::InvalidArbo, to_string(r.violation) + ": " + r.detail);
  ArboNE a;
  a.dp_ = dp;
  a.anchors_ = anchors;
  for (int v = 0; v < dp.size(); ++v) {
    if (v != anchors.four) a.tree_vertices_.push_back(v);
  }
  a.tree_ = dp.restricted(a.tree_vertices_);
  return a;
}

int ArboNE::tree_index(int dp_element) const {
  auto it = std::find(tree_vertices_.begin(), tree_vertices_.end(), dp_element);
  if (it == tree_vertices_.end()) fail(ErrorCode::UnknownNode, "element is not in the tree part");
  return static_cast<int>(it - tree_vertices_.begin());
}

ArboNE ArboNE::swapped() const {
  ArboAnchors an = anchors_;
  std::swap(an.one, an.three);
  return validate(dp_.swap(), an);
}

ArboNE bare_3214() { return ArboNE::validate(perm_to_dp(Permutation({3, 2, 1, 4})), {0, 1, 2, 3}); }

namespace {

CornerTree sw_subtree(const DoublePoset& t, std::vector<int> nodes, int root) {
  std::sort(nodes.begin(), nodes.end());
  const int r = static_cast<int>(std::find(nodes.begin(), nodes.end(), root) - nodes.begin());
  CornerTree ct = dp_to_corner_tree(t.restricted(nodes), r);
  for (const auto& e : ct.edges()) {
    if (e.label != CornerLabel::SW) fail(ErrorCode::InvalidArbo, "dangle edge is not south-west");
  }
  return ct;
}

}  // namespace

ArboDecomposition decompose(const ArboNE& a) {
  const DoublePoset& t = a.tree();
  const int t1 = a.tree_index(a.anchors().one);
  const int t3 = a.tree_index(a.anchors().three);
  const int t2 = a.anchors().two ? a.tree_index(*a.anchors().two) : -1;
  ArboDecomposition d{dp_to_corner_tree(t, t3), dp_to_corner_tree(t.swap(), t1), {}, {}, std::nullopt, {}, {}, {}};
  if (!d.west_tree.all_west() || !d.inv_west_tree.all_west()) {
    fail(ErrorCode::InvalidArbo, "stream trees are not all-West");
  }
  const auto adj = hasse_adjacency(t.west);
  std::set<int> spine{t1, t3};
  if (t2 >= 0) spine.insert(t2);
  auto hanging = [&](int anchor, std::vector<CornerTree>& trees, std::vector<std::vector<int>>& node_sets) {
    for (int u : adj[anchor]) {
      if (spine.count(u)) continue;
      auto nodes = component(adj, u, spine);
      std::sort(nodes.begin(), nodes.end());
      trees.push_back(sw_subtree(t, nodes, u));
      node_sets.push_back(nodes);
    }
  };
  hanging(t3, d.dangle3_trees, d.dangle3_nodes);
  hanging(t1, d.dangle1_trees, d.dangle1_nodes);
  if (t2 >= 0) {
    std::set<int> blocked{t1, t3};
    auto nodes = component(adj, t2, blocked);
    std::sort(nodes.begin(), nodes.end());
    d.dangle2_tree = sw_subtree(t, nodes, t2);
    d.dangle2_nodes = nodes;
  }
  return d;
}

BlockGrid::BlockGrid(std::size_t n_, std::size_t m_) : n(n_), m(m_) {
  if (m < 1) fail(ErrorCode::InvalidInput, "block size must be at least 1");
}

std::size_t default_block_size(std::size_t n) {
  auto m = static_cast<std::size_t>(std::cbrt(static_cast<double>(n)));
  while ((m + 1) * (m + 1) * (m + 1) <= n) ++m;
  while (m > 0 && m * m * m > n) --m;
  return std::max<std::size_t>(1, m);
}

unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PATTERNCOUNT_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<unsigned>(std::min<long>(v, 1024));
  }
  return hw;
}

namespace {

// Sums fn(block) over all blocks; workers own their scratch state via make_state.
template <class T, class State, class MakeState, class Fn>
T block_sum(std::size_t blocks, MakeState make_state, Fn fn) {
  std::vector<T> partial(blocks);
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), std::max<std::size_t>(blocks, 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    State st = make_state();
    for (std::size_t b; (b = next.fetch_add(1)) < blocks;) partial[b] = fn(st, b);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        try {
          work();
        } catch (...) {
          errors[w] = std::current_exception();
          next = blocks;
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  T total{};
  for (const auto& v : partial) total += v;
  return total;
}

// Gated stream of `tree` over row block starts r: points below r feed the stream;
// a point inside [r, r+m) collects the running root total, or only the part collected
// since its column block started when same_column is set.
template <class T>
T gated_stream(const Permutation& p, const CornerTree& tree, const BlockGrid& g, bool same_column) {
  const std::size_t n = p.size();
  if (n == 0) return T{};
  auto make = [&]() { return StreamWestCounter<T>(tree, n); };
  auto fn = [&](StreamWestCounter<T>& s, std::size_t b) {
    const std::size_t r = b * g.m;
    const std::size_t r_end = std::min(n, r + g.m);
    T w{}, snap{}, res{};
    if (r == 0) return res;
    s.reset(r);
    for (std::size_t i = 0; i < n; ++i) {
      if (same_column && i % g.m == 0) snap = w;
      const std::size_t y = static_cast<std::size_t>(p[i] - 1);
      if (y < r) {
        w += s.process(i, y);
      } else if (y < r_end) {
        res += same_column ? w - snap : w;
      }
    }
    return res;
  };
  return block_sum<T, StreamWestCounter<T>>(g.block_count(), make, fn);
}

void check_grid(const Permutation& p, const BlockGrid& g) {
  if (g.n != p.size()) fail(ErrorCode::InvalidInput, "block grid size does not match the permutation");
}

}  // namespace

template <class T>
T count_type_a(const Permutation& p, const ArboNE& a, const BlockGrid& grid) {
  check_grid(p, grid);
  require_headroom<T>(a.dp().size(), p.size());
  return gated_stream<T>(p, decompose(a).west_tree, grid, false);
}

template <class T>
T count_type_a_not_b(const Permutation& p, const ArboNE& a, const BlockGrid& grid) {
  check_grid(p, grid);
  require_headroom<T>(a.dp().size(), p.size());
  return gated_stream<T>(p, decompose(a).west_tree, grid, true);
}

template <class T>
T count_type_b_not_a(const Permutation& p, const ArboNE& a, const BlockGrid& grid) {
  return count_type_a_not_b<T>(p.inverse(), a.swapped(), grid);
}

namespace {

template <class T>
ProductTree<T> fill_boxes(const Permutation& p, const std::vector<int>& layout, const CornerTree& tree,
                          std::vector<T>* weights = nullptr) {
  const std::size_t n = p.size();
  ProductTree<T> box(n, layout);
  StreamWestCounter<T> s(tree, n);
  if (weights) weights->assign(n, T{});
  for (std::size_t x = 0; x < n; ++x) {
    const auto y = static_cast<std::size_t>(layout[x]);
    const T w = s.process(x, y);
    box.add(x, y, w);
    if (weights) (*weights)[x] = w;
  }
  return box;
}

}  // namespace

template <class T>
T count_box(const Permutation& p, const ArboNE& a, const BlockGrid& grid) {
  check_grid(p, grid);
  require_headroom<T>(a.dp().size(), p.size());
  const std::size_t n = p.size();
  if (n == 0) return T{};
  const ArboDecomposition d = decompose(a);
  std::vector<int> val(n), inv(n);
  for (std::size_t x = 0; x < n; ++x) {
    val[x] = p[x] - 1;
    inv[val[x]] = static_cast<int>(x);
  }
  // product of dangle boxes south-west of each point, for use at three and at one
  auto corner_products = [&](const std::vector<CornerTree>& trees) {
    std::vector<T> prod(n, T{1});
    for (const auto& tr : trees) {
      ProductTree<T> box = fill_boxes<T>(p, val, tr);
      for (std::size_t x = 0; x < n; ++x) prod[x] *= box.dominance(x, static_cast<std::size_t>(val[x]));
    }
    return prod;
  };
  const std::vector<T> p3 = corner_products(d.dangle3_trees);
  const std::vector<T> p1 = corner_products(d.dangle1_trees);
  const std::size_t m = grid.m;
  T total{};
  if (!d.dangle2_tree) {
    for (std::size_t x4 = 0; x4 < n; ++x4) {
      const std::size_t y4 = static_cast<std::size_t>(val[x4]);
      const std::size_t col = x4 - x4 % m;
      const std::size_t row = y4 - y4 % m;
      for (std::size_t x3 = col; x3 < x4; ++x3) {
        const std::size_t y3 = static_cast<std::size_t>(val[x3]);
        if (y3 >= y4) continue;
        T inner{};
        for (std::size_t y1 = std::max(row, y3 + 1); y1 < y4; ++y1) {
          if (static_cast<std::size_t>(inv[y1]) < x3) inner += p1[inv[y1]];
        }
        total += p3[x3] * inner;
      }
    }
    return total;
  }

  // The weight of `two` strictly between one (x1, y1) and three (x3, y3) is
  // D(x3, y1) - D(x1 + 1, y1) - D(x3, y3 + 1) + D(x1 + 1, y3 + 1) with D the dominance sum.
  std::vector<T> w2;
  const ProductTree<T> box2 = fill_boxes<T>(p, val, *d.dangle2_tree, &w2);
  std::vector<T> d_one(n), d_three(n);
  for (std::size_t y = 0; y < n; ++y) d_one[y] = box2.dominance(static_cast<std::size_t>(inv[y]) + 1, y);
  for (std::size_t x = 0; x < n; ++x) d_three[x] = box2.dominance(x, static_cast<std::size_t>(val[x]) + 1);
  std::vector<T> table(m);
  for (std::size_t x4 = 0; x4 < n; ++x4) {
    const std::size_t y4 = static_cast<std::size_t>(val[x4]);
    const std::size_t col = x4 - x4 % m;
    const std::size_t row = y4 - y4 % m;
    // table[y - row] = D(x3, y), advanced column by column
    for (std::size_t y = row; y < y4; ++y) table[y - row] = box2.dominance(col, y);
    for (std::size_t x3 = col; x3 < x4; ++x3) {
      const std::size_t y3 = static_cast<std::size_t>(val[x3]);
      if (y3 < y4) {
        T inner{};
        for (std::size_t y1 = std::max(row, y3 + 1); y1 < y4; ++y1) {
          const std::size_t x1 = static_cast<std::size_t>(inv[y1]);
          if (x1 >= x3) continue;
          inner += p1[x1] * (table[y1 - row] - d_one[y1] - d_three[x3] + box2.dominance(x1 + 1, y3 + 1));
        }
        total += p3[x3] * inner;
      }
      for (std::size_t y = std::max(row, y3 + 1); y < y4; ++y) table[y - row] += w2[x3];
    }
  }
  return total;
}

template <class T>
T count_gen_3214(const Permutation& p, const ArboNE& a, std::optional<std::size_t> m) {
  const std::size_t n = p.size();
  require_headroom<T>(a.dp().size(), n);
  if (n == 0) return T{};
  const BlockGrid grid(n, m ? *m : default_block_size(n));
  return count_type_a<T>(p, a, grid) + count_type_b_not_a<T>(p, a, grid) + count_box<T>(p, a, grid);
}

template <class T>
T count_gen_3214_anti(const Permutation& p, const ArboNE& a, std::optional<std::size_t> m) {
  return count_gen_3214<T>(p.reverse_complement(), a, m);
}

#define PATTERNCOUNT_INSTANTIATE(T)                                                                  \
  template T count_type_a<T>(const Permutation&, const ArboNE&, const BlockGrid&);                 \
  template T count_type_a_not_b<T>(const Permutation&, const ArboNE&, const BlockGrid&);           \
  template T count_type_b_not_a<T>(const Permutation&, const ArboNE&, const BlockGrid&);           \
  template T count_box<T>(const Permutation&, const ArboNE&, const BlockGrid&);                    \
  template T count_gen_3214<T>(const Permutation&, const ArboNE&, std::optional<std::size_t>);     \
  template T count_gen_3214_anti<T>(const Permutation&, const ArboNE&, std::optional<std::size_t>);

PATTERNCOUNT_INSTANTIATE(Int128)
PATTERNCOUNT_INSTANTIATE(mpz_class)

#undef PATTERNCOUNT_INSTANTIATE

}  // namespace patterncount

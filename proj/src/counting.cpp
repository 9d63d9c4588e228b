#include "patterncount/counting.hpp"

#include <algorithm>
#include <bit>

#include "patterncount/errors.hpp"

namespace patterncount {

namespace {

template <class T>
struct Profiles {
  std::vector<std::vector<T>> vertex;
  std::vector<std::vector<T>> edge;
};

template <class T>
Profiles<T> compute_profiles(const Permutation& p, const CornerTree& ct) {
  require_headroom<T>(ct.size(), p.size());
  const std::size_t n = p.size();
  Profiles<T> pr;
  pr.vertex.resize(ct.size());
  pr.edge.resize(ct.size());
  for (int v : ct.post_order()) {
    std::vector<T> x(n, T{1});
    for (int c : ct.children(v)) {
      const CornerLabel l = ct.label(c);
      std::vector<T> z(n);
      SumTree<T> y(n);
      const auto& xc = pr.vertex[c];
      auto step = [&](std::size_t i) {
        const std::size_t val = static_cast<std::size_t>(p[i]);
        y.add(val, xc[i]);
        z[i] = is_south(l) ? y.prefix_sum(val) : y.suffix_sum(val);
      };
      if (is_west(l)) {
        for (std::size_t i = 0; i < n; ++i) step(i);
      } else {
        for (std::size_t i = n; i-- > 0;) step(i);
      }
      for (std::size_t i = 0; i < n; ++i) x[i] *= z[i];
      pr.edge[c] = std::move(z);
    }
    pr.vertex[v] = std::move(x);
  }
  return pr;
}

}  // namespace

template <class T>
std::vector<T> vertex_profile(const Permutation& p, const CornerTree& ct, int v) {
  if (v < 0 || v >= ct.size()) fail(ErrorCode::UnknownNode, "vertex out of range");
  return compute_profiles<T>(p, ct).vertex[v];
}

template <class T>
std::vector<T> edge_profile(const Permutation& p, const CornerTree& ct, int child) {
  if (child < 0 || child >= ct.size() || child == ct.root()) fail(ErrorCode::UnknownNode, "no edge above that vertex");
  return compute_profiles<T>(p, ct).edge[child];
}

template <class T>
T count_corner_tree(const Permutation& p, const CornerTree& ct) {
  auto pr = compute_profiles<T>(p, ct);
  T total{};
  for (const auto& v : pr.vertex[ct.root()]) total += v;
  return total;
}

namespace {

struct MorphismSearch {
  const DoublePoset& d;
  const Permutation& p;
  std::vector<int> order;
  std::vector<int> pos;
  std::uint64_t budget;
  std::uint64_t visited = 0;
  std::uint64_t count = 0;

  void run(std::size_t t) {
    if (++visited > budget) fail(ErrorCode::BudgetExceeded, "morphism search exceeded its node budget");
    if (t == order.size()) {
      ++count;
      return;
    }
    const int v = order[t];
    const int n = static_cast<int>(p.size());
    int lo = 0;
    for (std::size_t s = 0; s < t; ++s) {
      const int u = order[s];
      if (d.west.less(u, v)) lo = std::max(lo, pos[u] + 1);
    }
    for (int x = lo; x < n; ++x) {
      bool ok = true;
      for (std::size_t s = 0; s < t && ok; ++s) {
        const int u = order[s];
        if (d.west.less(v, u) && !(x < pos[u])) ok = false;
        else if (d.south.less(u, v) && !(p[pos[u]] < p[x])) ok = false;
        else if (d.south.less(v, u) && !(p[x] < p[pos[u]])) ok = false;
      }
      if (!ok) continue;
      pos[v] = x;
      run(t + 1);
    }
    pos[v] = -1;
  }
};

}  // namespace

std::uint64_t naive_morphism_count(const DoublePoset& d, const Permutation& p, std::uint64_t budget) {
  const int k = d.size();
  MorphismSearch s{d, p, {}, std::vector<int>(k, -1), budget};
  // linear extension of west: fewest predecessors first is enough since closure is stored
  s.order.resize(k);
  for (int i = 0; i < k; ++i) s.order[i] = i;
  std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) {
    return std::popcount(d.west.predecessors(a)) < std::popcount(d.west.predecessors(b));
  });
  s.run(0);
  return s.count;
}

template <class T>
T count_all_west(const Permutation& p, const CornerTree& tree) {
  require_headroom<T>(tree.size(), p.size());
  StreamWestCounter<T> c(tree, p.size());
  T total{};
  for (std::size_t i = 0; i < p.size(); ++i) total += c.process(i, static_cast<std::size_t>(p[i] - 1));
  return total;
}

#define PATTERNCOUNT_INSTANTIATE(T)                                                        \
  template std::vector<T> vertex_profile<T>(const Permutation&, const CornerTree&, int); \
  template std::vector<T> edge_profile<T>(const Permutation&, const CornerTree&, int);   \
  template T count_corner_tree<T>(const Permutation&, const CornerTree&);                \
  template T count_all_west<T>(const Permutation&, const CornerTree&);

PATTERNCOUNT_INSTANTIATE(Int128)
PATTERNCOUNT_INSTANTIATE(mpz_class)

#undef PATTERNCOUNT_INSTANTIATE

}  // namespace patterncount

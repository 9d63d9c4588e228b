#include "patterncount/random.hpp"

#include <algorithm>
#include <numeric>

namespace patterncount {

Permutation random_permutation(std::size_t n, Rng& rng) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::move(v));
}

CornerTree random_corner_tree(int nodes, Rng& rng, bool west_only) {
  std::vector<CornerEdge> edges;
  for (int v = 1; v < nodes; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    std::uniform_int_distribution<int> label(0, west_only ? 1 : 3);
    const CornerLabel all[] = {CornerLabel::NW, CornerLabel::SW, CornerLabel::NE, CornerLabel::SE};
    edges.push_back({parent(rng), v, all[label(rng)]});
  }
  // relabel so the root is not always 0
  std::vector<int> perm(nodes);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& e : edges) {
    e.parent = perm[e.parent];
    e.child = perm[e.child];
  }
  return {nodes, perm[0], edges};
}

SNPolytree random_snpolytree(int nodes, Rng& rng) {
  return ct_to_snpolytree(random_corner_tree(nodes, rng));
}

DoublePoset random_double_poset(int n, double density, Rng& rng) {
  std::bernoulli_distribution coin(density);
  auto order = [&]() {
    std::vector<int> lin(n);
    std::iota(lin.begin(), lin.end(), 0);
    std::shuffle(lin.begin(), lin.end(), rng);
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (coin(rng)) rel.emplace_back(lin[a], lin[b]);
      }
    }
    return StrictPoset::from_relation(n, rel);
  };
  StrictPoset w = order();
  StrictPoset s = order();
  return {w, s};
}

ArboNE random_arbo(int total_nodes, Rng& rng) {
  const bool with_two = total_nodes >= 4 && std::bernoulli_distribution(0.7)(rng);
  std::vector<std::pair<int, int>> w, s;
  // 0 = one, 1 = three, 2 = four, 3 = two if present
  const int one = 0, three = 1, four = 2;
  int next = 3;
  std::vector<int> tree_nodes{one, three};
  if (with_two) {
    const int two = next++;
    tree_nodes.push_back(two);
    w.insert(w.end(), {{one, two}, {two, three}});
    s.insert(s.end(), {{three, two}, {two, one}});
  } else {
    w.emplace_back(one, three);
    s.emplace_back(three, one);
  }
  while (next < total_nodes) {
    const int v = next++;
    std::uniform_int_distribution<std::size_t> pick(0, tree_nodes.size() - 1);
    const int parent = tree_nodes[pick(rng)];
    w.emplace_back(v, parent);
    s.emplace_back(v, parent);
    tree_nodes.push_back(v);
  }
  for (int v : tree_nodes) {
    w.emplace_back(v, four);
    s.emplace_back(v, four);
  }
  const int n = std::max(total_nodes, 3);
  DoublePoset dp(StrictPoset::from_relation(n, w), StrictPoset::from_relation(n, s));
  ArboAnchors an{one, with_two ? std::optional<int>(3) : std::nullopt, three, four};
  // shuffle element names
  std::vector<int> to(n);
  std::iota(to.begin(), to.end(), 0);
  std::shuffle(to.begin(), to.end(), rng);
  ArboAnchors moved{to[an.one], an.two ? std::optional<int>(to[*an.two]) : std::nullopt, to[an.three], to[an.four]};
  return ArboNE::validate(dp.relabeled(to), moved);
}

}  // namespace patterncount

#include "patterncount/trees.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "patterncount/errors.hpp"

namespace patterncount {

CornerLabel make_corner_label(bool child_west, bool child_south) {
  if (child_west) return child_south ? CornerLabel::SW : CornerLabel::NW;
  return child_south ? CornerLabel::SE : CornerLabel::NE;
}

std::string to_string(CornerLabel l) {
  switch (l) {
    case CornerLabel::NE: return "NE";
    case CornerLabel::NW: return "NW";
    case CornerLabel::SE: return "SE";
    case CornerLabel::SW: return "SW";
  }
  return "?";
}

CornerLabel parse_corner_label(const std::string& s) {
  if (s == "NE") return CornerLabel::NE;
  if (s == "NW") return CornerLabel::NW;
  if (s == "SE") return CornerLabel::SE;
  if (s == "SW") return CornerLabel::SW;
  fail(ErrorCode::InvalidInput, "unknown corner label '" + s + "'");
}

std::string to_string(SNLabel l) { return l == SNLabel::S ? "S" : "N"; }

CornerTree::CornerTree(int node_count, int root, const std::vector<CornerEdge>& edges)
    : root_(root), parent_(node_count, -1), label_(node_count, CornerLabel::NE), children_(node_count) {
  if (node_count < 1) fail(ErrorCode::InvalidInput, "corner tree needs at least one node");
  if (root < 0 || root >= node_count) fail(ErrorCode::UnknownNode, "root out of range");
  if (static_cast<int>(edges.size()) != node_count - 1) {
    fail(ErrorCode::InvalidInput, "corner tree on " + std::to_string(node_count) + " nodes needs " +
                                      std::to_string(node_count - 1) + " edges");
  }
  for (const auto& e : edges) {
    if (e.parent < 0 || e.parent >= node_count || e.child < 0 || e.child >= node_count) {
      fail(ErrorCode::UnknownNode, "edge endpoint out of range");
    }
    if (e.child == root) fail(ErrorCode::InvalidInput, "root cannot have a parent edge");
    if (parent_[e.child] != -1) {
      fail(ErrorCode::InvalidInput, "node " + std::to_string(e.child) + " has two parent edges");
    }
    parent_[e.child] = e.parent;
    label_[e.child] = e.label;
    children_[e.parent].push_back(e.child);
  }
  for (auto& c : children_) std::sort(c.begin(), c.end());
  // every node must reach the root
  for (int v = 0; v < node_count; ++v) {
    int u = v;
    for (int steps = 0; u != root; ++steps) {
      if (steps > node_count) fail(ErrorCode::InvalidInput, "corner tree edges contain a cycle");
      u = parent_[u];
    }
  }
}

std::vector<CornerEdge> CornerTree::edges() const {
  std::vector<CornerEdge> out;
  for (int v = 0; v < size(); ++v) {
    if (v != root_) out.push_back({parent_[v], v, label_[v]});
  }
  return out;
}

std::vector<int> CornerTree::post_order() const {
  std::vector<int> order;
  std::vector<std::pair<int, std::size_t>> stack{{root_, 0}};
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    if (i < children_[v].size()) {
      int c = children_[v][i++];
      stack.emplace_back(c, 0);
    } else {
      order.push_back(v);
      stack.pop_back();
    }
  }
  return order;
}

bool CornerTree::all_west() const {
  for (int v = 0; v < size(); ++v) {
    if (v != root_ && !is_west(label_[v])) return false;
  }
  return true;
}

SNPolytree::SNPolytree(int node_count, std::vector<SNEdge> edges) : n_(node_count), edges_(std::move(edges)) {
  if (node_count < 1) fail(ErrorCode::InvalidInput, "polytree needs at least one node");
  if (static_cast<int>(edges_.size()) != node_count - 1) {
    fail(ErrorCode::InvalidInput, "polytree on " + std::to_string(node_count) + " nodes needs " +
                                      std::to_string(node_count - 1) + " edges");
  }
  std::vector<int> parent(node_count);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& e : edges_) {
    if (e.tail < 0 || e.tail >= node_count || e.head < 0 || e.head >= node_count) {
      fail(ErrorCode::UnknownNode, "edge endpoint out of range");
    }
    int a = find(e.tail), b = find(e.head);
    if (a == b) fail(ErrorCode::InvalidInput, "polytree edges contain a cycle");
    parent[a] = b;
  }
  std::sort(edges_.begin(), edges_.end());
}

bool operator==(const SNPolytree& a, const SNPolytree& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

SNPolytree ct_to_snpolytree(const CornerTree& ct) {
  std::vector<SNEdge> out;
  for (const auto& e : ct.edges()) {
    const bool cw = is_west(e.label);
    const bool cs = is_south(e.label);
    int head = cw ? e.child : e.parent;
    int tail = cw ? e.parent : e.child;
    bool head_south = cw ? cs : !cs;
    out.push_back({tail, head, head_south ? SNLabel::S : SNLabel::N});
  }
  return {ct.size(), std::move(out)};
}

CornerTree snpolytree_to_ct(const SNPolytree& t, int root) {
  if (root < 0 || root >= t.size()) fail(ErrorCode::UnknownNode, "root " + std::to_string(root) + " not in polytree");
  std::vector<std::vector<int>> adj(t.size());
  for (std::size_t i = 0; i < t.edges().size(); ++i) {
    adj[t.edges()[i].tail].push_back(static_cast<int>(i));
    adj[t.edges()[i].head].push_back(static_cast<int>(i));
  }
  std::vector<CornerEdge> out;
  std::vector<char> seen(t.size(), 0);
  std::vector<int> stack{root};
  seen[root] = 1;
  while (!stack.empty()) {
    int p = stack.back();
    stack.pop_back();
    for (int ei : adj[p]) {
      const auto& e = t.edges()[ei];
      int c = e.tail == p ? e.head : e.tail;
      if (seen[c]) continue;
      seen[c] = 1;
      // head is the west endpoint; S means the head lies south of the tail
      const bool toward_parent = e.head == p;
      const bool child_west = !toward_parent;
      const bool child_south = toward_parent ? e.label == SNLabel::N : e.label == SNLabel::S;
      out.push_back({p, c, make_corner_label(child_west, child_south)});
      stack.push_back(c);
    }
  }
  return {t.size(), root, out};
}

DoublePoset snpolytree_to_dp(const SNPolytree& t) {
  std::vector<std::pair<int, int>> w, s;
  for (const auto& e : t.edges()) {
    w.emplace_back(e.head, e.tail);
    if (e.label == SNLabel::S) s.emplace_back(e.head, e.tail);
    else s.emplace_back(e.tail, e.head);
  }
  return {StrictPoset::from_relation(t.size(), w), StrictPoset::from_relation(t.size(), s)};
}

SNPolytree dp_to_snpolytree(const DoublePoset& d) {
  if (!classify(d).twin_tree) fail(ErrorCode::NotTwinTree, "double poset is not a twin tree");
  std::vector<SNEdge> out;
  for (auto [u, v] : d.west.covers()) out.push_back({v, u, d.south.less(u, v) ? SNLabel::S : SNLabel::N});
  return {d.size(), std::move(out)};
}

DoublePoset corner_tree_to_dp(const CornerTree& ct) { return snpolytree_to_dp(ct_to_snpolytree(ct)); }

CornerTree dp_to_corner_tree(const DoublePoset& d, int root) {
  return snpolytree_to_ct(dp_to_snpolytree(d), root);
}

namespace {

std::string ahu(const std::vector<std::vector<int>>& adj, int v, int from) {
  std::vector<std::string> parts;
  for (int c : adj[v]) {
    if (c != from) parts.push_back(ahu(adj, c, v));
  }
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (auto& p : parts) s += p;
  return s + ")";
}

// Unlabeled free trees on k nodes, as edge lists.
std::vector<std::vector<std::pair<int, int>>> free_trees(int k) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (k == 1) return {{}};
  if (k == 2) return {{{0, 1}}};
  std::map<std::string, std::vector<std::pair<int, int>>> seen;
  std::vector<int> prufer(k - 2, 0);
  while (true) {
    std::vector<int> degree(k, 1);
    for (int x : prufer) ++degree[x];
    std::vector<std::pair<int, int>> edges;
    for (int x : prufer) {
      for (int leaf = 0; leaf < k; ++leaf) {
        if (degree[leaf] == 1) {
          edges.emplace_back(leaf, x);
          --degree[leaf];
          --degree[x];
          break;
        }
      }
    }
    int a = -1;
    for (int v = 0; v < k; ++v) {
      if (degree[v] == 1) {
        if (a < 0) a = v;
        else edges.emplace_back(a, v);
      }
    }
    std::vector<std::vector<int>> adj(k);
    for (auto [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    std::string best;
    for (int r = 0; r < k; ++r) {
      std::string s = ahu(adj, r, -1);
      if (best.empty() || s < best) best = s;
    }
    seen.emplace(best, edges);
    int i = k - 3;
    while (i >= 0 && prufer[i] == k - 1) prufer[i--] = 0;
    if (i < 0) break;
    ++prufer[i];
  }
  for (auto& [key, e] : seen) out.push_back(e);
  return out;
}

}  // namespace

std::vector<SNPolytree> enumerate_snpolytrees(int k) {
  if (k > kMaxEnumeratedPolytree) {
    fail(ErrorCode::TooLarge, "polytree enumeration is limited to " + std::to_string(kMaxEnumeratedPolytree) + " nodes");
  }
  if (k < 1) fail(ErrorCode::InvalidInput, "polytree size must be positive");
  std::set<CanonicalForm> classes;
  for (const auto& edges : free_trees(k)) {
    const int m = static_cast<int>(edges.size());
    for (int mask = 0; mask < (1 << (2 * m)); ++mask) {
      std::vector<SNEdge> es;
      for (int i = 0; i < m; ++i) {
        bool flip = (mask >> (2 * i)) & 1;
        bool north = (mask >> (2 * i + 1)) & 1;
        auto [u, v] = edges[i];
        es.push_back({flip ? v : u, flip ? u : v, north ? SNLabel::N : SNLabel::S});
      }
      classes.insert(canonical_form(snpolytree_to_dp(SNPolytree(k, es))));
    }
  }
  std::vector<SNPolytree> out;
  for (const auto& c : classes) out.push_back(dp_to_snpolytree(from_canonical(c)));
  return out;
}

}  // namespace patterncount

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "patterncount/core.hpp"

namespace patterncount {

enum class CornerLabel { NE, NW, SE, SW };

inline bool is_west(CornerLabel l) { return l == CornerLabel::NW || l == CornerLabel::SW; }
inline bool is_south(CornerLabel l) { return l == CornerLabel::SW || l == CornerLabel::SE; }
CornerLabel make_corner_label(bool child_west, bool child_south);
std::string to_string(CornerLabel l);
CornerLabel parse_corner_label(const std::string& s);

struct CornerEdge {
  int parent;
  int child;
  CornerLabel label;
};

// Rooted tree on nodes 0..size-1, each non-root node carrying the label of its parent edge,
// i.e. where the child sits relative to the parent.
class CornerTree {
 public:
  CornerTree() : CornerTree(1, 0, {}) {}
  CornerTree(int node_count, int root, const std::vector<CornerEdge>& edges);

  int size() const { return static_cast<int>(parent_.size()); }
  int root() const { return root_; }
  int parent(int v) const { return parent_[v]; }
  CornerLabel label(int v) const { return label_[v]; }
  const std::vector<int>& children(int v) const { return children_[v]; }
  std::vector<CornerEdge> edges() const;
  // Children before parents.
  std::vector<int> post_order() const;
  bool all_west() const;

  friend bool operator==(const CornerTree&, const CornerTree&) = default;

 private:
  int root_;
  std::vector<int> parent_;
  std::vector<CornerLabel> label_;
  std::vector<std::vector<int>> children_;
};

enum class SNLabel { S, N };

std::string to_string(SNLabel l);

// Directed edge; head is the arrow target, which is the west endpoint.
struct SNEdge {
  int tail;
  int head;
  SNLabel label;

  friend auto operator<=>(const SNEdge&, const SNEdge&) = default;
};

class SNPolytree {
 public:
  SNPolytree() : n_(1) {}
  SNPolytree(int node_count, std::vector<SNEdge> edges);

  int size() const { return n_; }
  const std::vector<SNEdge>& edges() const { return edges_; }

  // Same edge set.
  friend bool operator==(const SNPolytree& a, const SNPolytree& b);

 private:
  int n_;
  std::vector<SNEdge> edges_;
};

SNPolytree ct_to_snpolytree(const CornerTree& ct);
CornerTree snpolytree_to_ct(const SNPolytree& t, int root);
DoublePoset snpolytree_to_dp(const SNPolytree& t);
SNPolytree dp_to_snpolytree(const DoublePoset& d);

DoublePoset corner_tree_to_dp(const CornerTree& ct);
// Twin-tree double poset rooted at `root`.
CornerTree dp_to_corner_tree(const DoublePoset& d, int root);

inline constexpr int kMaxEnumeratedPolytree = 6;

// One representative per isomorphism class, sorted by canonical form.
std::vector<SNPolytree> enumerate_snpolytrees(int k);

}  // namespace patterncount

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "patterncount/core.hpp"
#include "patterncount/int128.hpp"
#include "patterncount/trees.hpp"

namespace patterncount {

struct ArboAnchors {
  int one = 0;
  std::optional<int> two;
  int three = 0;
  int four = 0;
};

enum class ArboViolation {
  None,
  NoGlobalMax,
  RestrictionNotTwinTree,
  BadSpine,
  BadDangleOrientation,
  ClosureMismatch,
};

std::string to_string(ArboViolation v);

struct ArboReport {
  ArboViolation violation = ArboViolation::None;
  std::string detail;

  bool ok() const { return violation == ArboViolation::None; }
};

ArboReport check_arbo(const DoublePoset& dp, const ArboAnchors& anchors);

// A 3214 spine (one, two, three below the global maximum four) with south-west dangles.
class ArboNE {
 public:
  // Throws InvalidArbo carrying the violation name.
  static ArboNE validate(const DoublePoset& dp, const ArboAnchors& anchors);

  const DoublePoset& dp() const { return dp_; }
  const ArboAnchors& anchors() const { return anchors_; }
  // dp without `four`; tree_vertices()[i] is the dp element behind tree element i.
  const DoublePoset& tree() const { return tree_; }
  const std::vector<int>& tree_vertices() const { return tree_vertices_; }
  int tree_index(int dp_element) const;

  // Exchange the two orders and the roles of one and three.
  ArboNE swapped() const;

 private:
  ArboNE() = default;
  DoublePoset dp_;
  ArboAnchors anchors_;
  DoublePoset tree_;
  std::vector<int> tree_vertices_;
};

inline ArboNE validate_arbo(const DoublePoset& dp, const ArboAnchors& anchors) {
  return ArboNE::validate(dp, anchors);
}

ArboNE bare_3214();

// All corner trees are over tree() indices.
struct ArboDecomposition {
  CornerTree west_tree;
  CornerTree inv_west_tree;
  std::vector<CornerTree> dangle3_trees;
  std::vector<CornerTree> dangle1_trees;
  std::optional<CornerTree> dangle2_tree;
  // node ids of each dangle tree in tree() indices
  std::vector<std::vector<int>> dangle3_nodes;
  std::vector<std::vector<int>> dangle1_nodes;
  std::vector<int> dangle2_nodes;
};

ArboDecomposition decompose(const ArboNE& a);

struct BlockGrid {
  std::size_t n = 0;
  std::size_t m = 1;

  BlockGrid(std::size_t n, std::size_t m);
  std::size_t start_of(std::size_t i) const { return i - i % m; }
  std::size_t block_count() const { return (n + m - 1) / m; }
};

std::size_t default_block_size(std::size_t n);

// f(one), f(four) in different row (value) blocks.
template <class T>
T count_type_a(const Permutation& p, const ArboNE& a, const BlockGrid& grid);
// f(one), f(four) in different row blocks and f(three), f(four) in the same column block.
template <class T>
T count_type_a_not_b(const Permutation& p, const ArboNE& a, const BlockGrid& grid);
// f(three), f(four) in different column (position) blocks and f(one), f(four) in the same row block.
template <class T>
T count_type_b_not_a(const Permutation& p, const ArboNE& a, const BlockGrid& grid);
// Same row block for one/four and same column block for three/four.
template <class T>
T count_box(const Permutation& p, const ArboNE& a, const BlockGrid& grid);

template <class T>
T count_gen_3214(const Permutation& p, const ArboNE& a, std::optional<std::size_t> m = std::nullopt);

// Occurrences of anti(a.dp()) in p, which equal occurrences of a in the reverse-complement.
template <class T>
T count_gen_3214_anti(const Permutation& p, const ArboNE& a, std::optional<std::size_t> m = std::nullopt);

// Worker count for block loops: PATTERNCOUNT_THREADS if set, else hardware concurrency.
unsigned worker_count();

}  // namespace patterncount

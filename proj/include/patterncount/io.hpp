#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "patterncount/core.hpp"
#include "patterncount/gen3214.hpp"
#include "patterncount/trees.hpp"

namespace patterncount {

enum class TreeSpecType { CornerTree, SNPolytree, DoublePoset, ArboNE };

std::string to_string(TreeSpecType t);

// A parsed tree file. `dp` is always filled; the other members depend on `type`.
struct TreeSpec {
  TreeSpecType type = TreeSpecType::DoublePoset;
  DoublePoset dp;
  std::optional<CornerTree> corner;
  std::optional<SNPolytree> polytree;
  std::optional<ArboNE> arbo;
  // anchors as written in an arbo_ne file, kept even when validation is skipped
  std::optional<ArboAnchors> anchors;
  // JSON identifiers of the nodes, indexed like dp elements
  std::vector<std::string> node_names;
};

// With validate_arbo = false an arbo_ne file is loaded as a plain double poset plus anchors.
TreeSpec parse_tree_spec(std::string_view json_text, bool validate_arbo = true);
TreeSpec load_tree_spec(const std::string& path, bool validate_arbo = true);

std::string serialize(const CornerTree& ct);
std::string serialize(const SNPolytree& t);
std::string serialize(const DoublePoset& d);
std::string serialize(const ArboNE& a);
std::string serialize(const TreeSpec& spec);

Permutation parse_permutation(std::string_view text);
Permutation load_permutation(const std::string& path);
std::string format_permutation(const Permutation& p);

}  // namespace patterncount

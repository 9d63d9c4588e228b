#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "patterncount/io.hpp"

namespace patterncount {

// The requested algorithm does not apply to the given tree.
struct NotApplicable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<CornerTree> as_corner_tree(const TreeSpec& spec);
// A rooting whose labels are all NW/SW, if one exists.
std::optional<CornerTree> as_west_tree(const TreeSpec& spec);

// "block" for arbos, "general" when a corner tree is available, otherwise "naive".
std::string resolve_algorithm(const TreeSpec& spec);

// Decimal count of occurrences of `spec` in p with algorithm general|stream|block|naive.
std::string count_spec(const Permutation& p, const TreeSpec& spec, const std::string& algorithm,
                       std::optional<std::size_t> block_size = std::nullopt, bool bigint = false);

}  // namespace patterncount

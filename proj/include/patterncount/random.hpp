#pragma once

#include <random>

#include "patterncount/core.hpp"
#include "patterncount/gen3214.hpp"
#include "patterncount/trees.hpp"

namespace patterncount {

using Rng = std::mt19937_64;

Permutation random_permutation(std::size_t n, Rng& rng);
// Uniform random labels unless west_only.
CornerTree random_corner_tree(int nodes, Rng& rng, bool west_only = false);
SNPolytree random_snpolytree(int nodes, Rng& rng);
// Each ordered pair is a relation generator with the given probability; generators
// respect a random linear order so the result is acyclic.
DoublePoset random_double_poset(int n, double density, Rng& rng);
// Spine of 3 or 4 nodes (two may be missing) plus random south-west dangles; total_nodes >= 3.
ArboNE random_arbo(int total_nodes, Rng& rng);

}  // namespace patterncount

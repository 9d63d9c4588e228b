#include "patterncount/dispatch.hpp"

#include "patterncount/counting.hpp"
#include "patterncount/gen3214.hpp"

namespace patterncount {

std::optional<CornerTree> as_corner_tree(const TreeSpec& spec) {
  if (spec.corner) return spec.corner;
  if (spec.polytree) return snpolytree_to_ct(*spec.polytree, 0);
  if (classify(spec.dp).twin_tree) return dp_to_corner_tree(spec.dp, 0);
  return std::nullopt;
}

std::optional<CornerTree> as_west_tree(const TreeSpec& spec) {
  if (spec.corner && spec.corner->all_west()) return spec.corner;
  if (!classify(spec.dp).twin_tree) return std::nullopt;
  for (int r = 0; r < spec.dp.size(); ++r) {
    CornerTree ct = dp_to_corner_tree(spec.dp, r);
    if (ct.all_west()) return ct;
  }
  return std::nullopt;
}

std::string resolve_algorithm(const TreeSpec& spec) {
  if (spec.arbo) return "block";
  if (as_corner_tree(spec)) return "general";
  return "naive";
}

namespace {

template <class T>
std::string run_count(const Permutation& p, const TreeSpec& spec, const std::string& algorithm,
                      std::optional<std::size_t> block_size) {
  if (algorithm == "general") {
    auto ct = as_corner_tree(spec);
    if (!ct) throw NotApplicable("general needs a corner tree or a twin-tree double poset");
    return to_decimal(count_corner_tree<T>(p, *ct));
  }
  if (algorithm == "stream") {
    auto ct = as_west_tree(spec);
    if (!ct) throw NotApplicable("stream needs a tree that can be rooted with only NW/SW labels");
    return to_decimal(count_all_west<T>(p, *ct));
  }
  if (algorithm == "block") {
    if (!spec.arbo) throw NotApplicable("block needs an arbo_ne tree file");
    return to_decimal(count_gen_3214<T>(p, *spec.arbo, block_size));
  }
  if (algorithm == "naive") return std::to_string(naive_morphism_count(spec.dp, p));
  throw NotApplicable("unknown algorithm '" + algorithm + "'");
}

}  // namespace

std::string count_spec(const Permutation& p, const TreeSpec& spec, const std::string& algorithm,
                       std::optional<std::size_t> block_size, bool bigint) {
  return bigint ? run_count<mpz_class>(p, spec, algorithm, block_size)
                : run_count<Int128>(p, spec, algorithm, block_size);
}

}  // namespace patterncount

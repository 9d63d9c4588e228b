#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "patterncount/core.hpp"
#include "patterncount/gen3214.hpp"

namespace patterncount {

enum class MorphismClass { Mor, Mono, Epi, RegMono, RegEpi, Iso };

std::string to_string(MorphismClass c);

inline constexpr int kMaxMorphismSize = 6;

// f[i] is the image of source element i.
bool is_morphism(const DoublePoset& src, const DoublePoset& dst, std::span<const int> f);
bool is_injective(const DoublePoset& src, const DoublePoset& dst, std::span<const int> f);
bool is_surjective(const DoublePoset& src, const DoublePoset& dst, std::span<const int> f);
// Injective and reflecting both orders.
bool is_regular_mono(const DoublePoset& src, const DoublePoset& dst, std::span<const int> f);
// Surjective and every cover of the target, in each order, is the image of a source relation.
bool is_regular_epi(const DoublePoset& src, const DoublePoset& dst, std::span<const int> f);
bool in_class(MorphismClass c, const DoublePoset& src, const DoublePoset& dst, std::span<const int> f);

// Calls fn on every morphism src -> dst.
void for_each_morphism(const DoublePoset& src, const DoublePoset& dst,
                       const std::function<void(std::span<const int>)>& fn);

std::uint64_t enumerate_morphisms(const DoublePoset& src, const DoublePoset& dst, MorphismClass c);

struct MorphismClassCounts {
  std::uint64_t mor = 0;
  std::uint64_t mono = 0;
  std::uint64_t epi = 0;
  std::uint64_t regmono = 0;
  std::uint64_t regepi = 0;
  std::uint64_t iso = 0;
  // automorphisms of the target
  std::uint64_t aut = 0;
};

MorphismClassCounts count_morphism_classes(const DoublePoset& src, const DoublePoset& dst);
std::uint64_t automorphism_count(const DoublePoset& d);

using DPVector = std::map<CanonicalForm, mpq_class>;
using PatternVector = std::map<Permutation, mpq_class>;

inline constexpr int kMaxPhiSize = 4;
inline constexpr int kMaxPhiMonoSize = 6;
inline constexpr int kMaxPatternVectorSize = 6;

// Canonical representatives of all isomorphism classes of double posets on k elements.
const std::vector<DoublePoset>& double_poset_classes(int k);

struct Quotient {
  DoublePoset dp;
  std::vector<int> block_of;
};

// Quotients of d by set partitions for which the quotient map is a morphism;
// the quotient orders are the transitive closures of the pushed relations.
std::vector<Quotient> morphism_quotients(const DoublePoset& d);

DPVector phi_regmono_from_mor(const DoublePoset& d);
DPVector phi_mono_from_mor(const DoublePoset& d);

PatternVector pattern_vector(const DoublePoset& d);
std::string to_string(const PatternVector& v);
// sum of coeff * occurrences in `big`
mpq_class pair_with_occurrences(const PatternVector& v, const Permutation& big);

struct FactorizationReport {
  bool pass = true;
  std::size_t classes_checked = 0;
  std::string counterexample;
};

FactorizationReport check_factorization(const DoublePoset& a, const DoublePoset& b);

// <DPC^mor(L), d> against its regmono and mono translations.
struct TranslationReport {
  mpq_class mor;
  mpq_class via_regmono;
  mpq_class via_mono;
  bool pass() const { return mor == via_regmono && mor == via_mono; }
};

TranslationReport check_translation(const DoublePoset& d, const DoublePoset& large);

struct TriangularityReport {
  bool triangular = true;
  bool unit_diagonal = true;
  std::size_t classes = 0;
  std::string counterexample;
};

// Matrix of phi_regmono_from_mor on the level-n classes ordered by (|P|, |Q|).
TriangularityReport check_triangularity(int n);

struct RankResult {
  std::size_t dim_span = 0;
  // rank of the level-k coordinates of the family's vectors
  std::size_t dim_top = 0;
  // dim(span ∩ level-k subspace) = dim_span - rank with level-k coordinates deleted
  std::size_t dim_top_intersection = 0;
};

RankResult rank_of_family(const std::vector<DoublePoset>& family, int k);

// Theta of every SN polytree class with 1..max_size nodes.
std::vector<DoublePoset> twin_tree_family(int max_size);

std::array<ArboNE, 3> new_direction_arbos();
std::vector<PatternVector> new_direction_vectors();

}  // namespace patterncount

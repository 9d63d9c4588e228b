#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace patterncount {

// A permutation of {1..n} in one-line notation. Positions are 0-based in the API,
// values stay 1-based as written.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  std::size_t size() const { return values_.size(); }
  int operator[](std::size_t i) const { return values_[i]; }
  std::span<const int> values() const { return values_; }

  Permutation inverse() const;
  // i -> n + 1 - p(n + 1 - i)
  Permutation reverse_complement() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

 private:
  std::vector<int> values_;
};

Permutation standardize(std::span<const int> window);

std::uint64_t naive_pattern_count(const Permutation& big, const Permutation& pattern);

// Strict partial order on {0..n-1}, n <= 64, stored transitively closed.
class StrictPoset {
 public:
  StrictPoset() = default;
  explicit StrictPoset(int n);

  // Closes the relation transitively. Cycles (including i < i) raise NotAcyclic.
  static StrictPoset from_relation(int n, std::span<const std::pair<int, int>> relation);
  // Elements listed in increasing order.
  static StrictPoset chain(std::span<const int> order);

  int size() const { return n_; }
  bool less(int i, int j) const { return (succ_[i] >> j) & 1u; }
  bool comparable(int i, int j) const { return less(i, j) || less(j, i); }
  std::uint64_t successors(int i) const { return succ_[i]; }
  std::uint64_t predecessors(int i) const;

  std::vector<std::pair<int, int>> pairs() const;
  std::vector<std::pair<int, int>> covers() const;
  std::size_t relation_size() const;
  bool is_total() const;

  StrictPoset opposite() const;
  // Element i is renamed to to[i].
  StrictPoset relabeled(std::span<const int> to) const;
  // Induced order on keep[0..], renumbered in that order.
  StrictPoset restricted(std::span<const int> keep) const;

  friend bool operator==(const StrictPoset&, const StrictPoset&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> succ_;
};

StrictPoset transitive_closure(int n, std::span<const std::pair<int, int>> relation);
std::vector<std::pair<int, int>> transitive_reduction(const StrictPoset& p);

struct DoublePoset {
  StrictPoset west;
  StrictPoset south;

  DoublePoset() = default;
  DoublePoset(StrictPoset w, StrictPoset s);

  int size() const { return west.size(); }
  DoublePoset swap() const { return {south, west}; }
  DoublePoset anti() const { return {west.opposite(), south.opposite()}; }
  DoublePoset relabeled(std::span<const int> to) const;
  DoublePoset restricted(std::span<const int> keep) const;

  friend bool operator==(const DoublePoset&, const DoublePoset&) = default;
};

DoublePoset perm_to_dp(const Permutation& p);
// Raises InvalidInput unless both orders are total.
Permutation dp_to_perm(const DoublePoset& d);

struct DPClass {
  bool twin = false;
  bool tree = false;
  bool twin_tree = false;
  bool permutation = false;
};

DPClass classify(const DoublePoset& d);

struct CanonicalForm {
  int n = 0;
  std::uint64_t west = 0;
  std::uint64_t south = 0;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

inline constexpr int kMaxCanonicalSize = 8;

CanonicalForm canonical_form(const DoublePoset& d);
DoublePoset from_canonical(const CanonicalForm& c);
bool isomorphic(const DoublePoset& a, const DoublePoset& b);

std::vector<Permutation> all_permutations(int n);

}  // namespace patterncount

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "patterncount/counting.hpp"
#include "patterncount/errors.hpp"
#include "patterncount/random.hpp"

using namespace patterncount;

namespace {

using L = CornerLabel;

Int128 I(long long v) { return Int128(v); }

std::vector<Int128> ints(std::initializer_list<long long> v) {
  std::vector<Int128> out;
  for (long long x : v) out.push_back(x);
  return out;
}

// West chain of k nodes where each child is SW of its parent.
CornerTree sw_chain(int k) {
  std::vector<CornerEdge> e;
  for (int i = 1; i < k; ++i) e.push_back({i - 1, i, L::SW});
  return CornerTree(k, 0, e);
}

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(CornerTreeCount, NorthWestEdgeTrace) {
  Permutation p({3, 4, 2, 5, 1});
  CornerTree ct(2, 0, {{0, 1, L::NW}});
  EXPECT_EQ(edge_profile<Int128>(p, ct, 1), ints({0, 0, 2, 0, 4}));
  EXPECT_EQ(count_corner_tree<Int128>(p, ct), I(6));
}

TEST(CornerTreeCount, SecondWorkedExample) {
  Permutation p({2, 3, 1, 5, 4, 6});
  // r -SE-> a, a -NE-> b, a -NW-> c
  CornerTree ct(4, 0, {{0, 1, L::SE}, {1, 2, L::NE}, {1, 3, L::NW}});
  EXPECT_EQ(vertex_profile<Int128>(p, ct, 0), ints({6, 6, 0, 1, 0, 0}));
  EXPECT_EQ(count_corner_tree<Int128>(p, ct), I(13));
  EXPECT_EQ(count_corner_tree<Int128>(p, ct), I(static_cast<long long>(oracle::corner_tree_count(p, ct))));
}

TEST(CornerTreeCount, SingleEdgesArePairs) {
  Rng rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    auto p = random_permutation(rng() % 15, rng);
    const long long inc = static_cast<long long>(oracle::pattern_count(p, Permutation({1, 2})));
    const long long dec = static_cast<long long>(oracle::pattern_count(p, Permutation({2, 1})));
    EXPECT_EQ(count_corner_tree<Int128>(p, CornerTree(2, 0, {{0, 1, L::NE}})), I(inc));
    EXPECT_EQ(count_corner_tree<Int128>(p, CornerTree(2, 0, {{0, 1, L::SW}})), I(inc));
    EXPECT_EQ(count_corner_tree<Int128>(p, CornerTree(2, 0, {{0, 1, L::NW}})), I(dec));
    EXPECT_EQ(count_corner_tree<Int128>(p, CornerTree(2, 0, {{0, 1, L::SE}})), I(dec));
  }
}

TEST(CornerTreeCount, SingleNodeCountsPoints) {
  EXPECT_EQ(count_corner_tree<Int128>(Permutation({2, 1, 3}), CornerTree()), I(3));
  EXPECT_EQ(count_corner_tree<Int128>(Permutation(), CornerTree()), I(0));
}

TEST(CornerTreeCount, MatchesDefinitionOracle) {
  Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    auto ct = random_corner_tree(1 + rng() % 5, rng);
    auto p = random_permutation(rng() % 11, rng);
    auto want = oracle::corner_tree_count(p, ct);
    ASSERT_EQ(count_corner_tree<Int128>(p, ct), I(static_cast<long long>(want)));
    ASSERT_EQ(count_corner_tree<mpz_class>(p, ct), mpz_class(std::to_string(want)));
  }
}

TEST(CornerTreeCount, VertexProfilesOfLeavesAreOnes) {
  CornerTree ct(3, 0, {{0, 1, L::NE}, {0, 2, L::SW}});
  Permutation p({4, 1, 3, 2});
  EXPECT_EQ(vertex_profile<Int128>(p, ct, 1), ints({1, 1, 1, 1}));
  EXPECT_THROW(edge_profile<Int128>(p, ct, 0), Error);
  EXPECT_THROW(vertex_profile<Int128>(p, ct, 3), Error);
}

TEST(CornerTreeCount, HeadroomGuard) {
  // 20 vertices over n = 100: ceil(20 * log2(101)) = 134 >= 127
  Permutation p = Permutation::identity(100);
  auto ct = sw_chain(20);
  try {
    count_corner_tree<Int128>(p, ct);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OverflowDetected);
  }
  EXPECT_EQ(count_corner_tree<mpz_class>(p, ct), mpz_class("535983370403809682970"));
  // 18 vertices: ceil(18 * log2(101)) = 120, accepted
  EXPECT_EQ(count_corner_tree<Int128>(p, sw_chain(18)).to_string(), "30664510802988208300");
}

TEST(NaiveMorphismCount, AgreesWithCornerTreeCount) {
  Rng rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    auto ct = random_corner_tree(1 + rng() % 5, rng);
    auto p = random_permutation(rng() % 13, rng);
    auto d = snpolytree_to_dp(ct_to_snpolytree(ct));
    ASSERT_EQ(I(static_cast<long long>(naive_morphism_count(d, p))), count_corner_tree<Int128>(p, ct));
  }
}

TEST(NaiveMorphismCount, PermutationPatternsAndPoints) {
  Rng rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    auto p = random_permutation(rng() % 12, rng);
    auto s = random_permutation(1 + rng() % 4, rng);
    EXPECT_EQ(naive_morphism_count(perm_to_dp(s), p), oracle::pattern_count(p, s));
  }
  EXPECT_EQ(naive_morphism_count(DoublePoset(StrictPoset(1), StrictPoset(1)), Permutation::identity(9)), 9u);
}

TEST(NaiveMorphismCount, GeneralDoublePosets) {
  Rng rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    auto d = random_double_poset(1 + rng() % 5, 0.3, rng);
    auto p = random_permutation(rng() % 9, rng);
    EXPECT_EQ(naive_morphism_count(d, p), oracle::occurrence_count(d, p));
  }
}

TEST(NaiveMorphismCount, Budget) {
  DoublePoset free4(StrictPoset(4), StrictPoset(4));
  try {
    naive_morphism_count(free4, Permutation::identity(30), 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(StreamWest, RejectsEastLabels) {
  try {
    StreamWestCounter<Int128> c(CornerTree(2, 0, {{0, 1, L::NE}}), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotWestTree);
  }
}

TEST(StreamWest, SingleSouthWestEdge) {
  Permutation p({3, 4, 2, 5, 1});
  StreamWestCounter<Int128> c(CornerTree(2, 0, {{0, 1, L::SW}}), 5);
  Int128 total = 0;
  for (std::size_t i = 0; i < 5; ++i) total += c.process(i, p[i] - 1);
  EXPECT_EQ(total, I(4));
}

TEST(StreamWest, OrderViolation) {
  StreamWestCounter<Int128> c(CornerTree(2, 0, {{0, 1, L::SW}}), 5);
  c.process(2, 1);
  try {
    c.process(2, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OrderViolation);
  }
  EXPECT_THROW(c.process(3, 7), Error);
  c.reset();
  EXPECT_EQ(c.process(0, 0), I(0));
}

TEST(StreamWest, ResetWithValueLimit) {
  Permutation p({3, 4, 2, 5, 1});
  StreamWestCounter<Int128> c(CornerTree(2, 0, {{0, 1, L::SW}}), 5);
  for (std::size_t i = 0; i < 5; ++i) c.process(i, p[i] - 1);
  // values 3, 2, 1 survive the limit and form no ascending pair
  c.reset(3);
  Int128 total = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    if (p[i] <= 3) total += c.process(i, p[i] - 1);
  }
  EXPECT_EQ(total, I(0));
  c.reset(3);
  EXPECT_THROW(c.process(0, 3), Error);
  EXPECT_THROW(c.reset(6), Error);
}

TEST(StreamWest, SingleNodeAlwaysOne) {
  StreamWestCounter<Int128> c(CornerTree(), 3);
  EXPECT_EQ(c.process(0, 2), I(1));
  EXPECT_EQ(c.process(1, 0), I(1));
}

// Feeding a subset of points counts occurrences inside that subset.
TEST(StreamWest, GatedStream) {
  Rng rng(59);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 14;
    auto p = random_permutation(n, rng);
    auto ct = random_corner_tree(1 + rng() % 4, rng, true);
    const int r = 1 + static_cast<int>(rng() % n);
    StreamWestCounter<Int128> c(ct, n);
    Int128 total = 0;
    std::vector<int> kept;
    for (std::size_t i = 0; i < n; ++i) {
      if (p[i] < r) {
        total += c.process(i, p[i] - 1);
        kept.push_back(p[i]);
      }
    }
    auto sub = standardize(kept);
    EXPECT_EQ(total, I(static_cast<long long>(oracle::corner_tree_count(sub, ct))));
  }
}

TEST(CountAllWest, AgreesWithGeneral) {
  Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    auto ct = random_corner_tree(1 + rng() % 5, rng, true);
    auto p = random_permutation(rng() % 201, rng);
    ASSERT_EQ(count_all_west<Int128>(p, ct), count_corner_tree<Int128>(p, ct));
  }
}

TEST(CountAllWest, IdentityChains) {
  for (int k = 1; k <= 5; ++k) {
    EXPECT_EQ(count_all_west<Int128>(Permutation::identity(20), sw_chain(k)), I(binom(20, k)));
  }
  EXPECT_EQ(count_all_west<Int128>(Permutation(), sw_chain(3)), I(0));
}

TEST(CornerTreeCount, AppendingMaximumNeverDecreases) {
  Rng rng(67);
  for (int trial = 0; trial < 50; ++trial) {
    auto ct = random_corner_tree(1 + rng() % 5, rng);
    auto p = random_permutation(rng() % 15, rng);
    std::vector<int> v(p.values().begin(), p.values().end());
    v.push_back(static_cast<int>(v.size()) + 1);
    EXPECT_LE(count_corner_tree<Int128>(p, ct), count_corner_tree<Int128>(Permutation(v), ct));
  }
}

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "patterncount/counting.hpp"
#include "patterncount/errors.hpp"
#include "patterncount/random.hpp"
#include "patterncount/trees.hpp"

using namespace patterncount;

namespace {

using L = CornerLabel;

// c -> a (N), c -> b (N) with a = 0, b = 1, c = 2
SNPolytree cherry_polytree() { return SNPolytree(3, {{2, 0, SNLabel::N}, {2, 1, SNLabel::N}}); }

}  // namespace

TEST(CornerTree, Validation) {
  EXPECT_THROW(CornerTree(3, 0, {{0, 1, L::NE}}), Error);
  EXPECT_THROW(CornerTree(2, 0, {{0, 1, L::NE}, {1, 0, L::NE}}), Error);
  EXPECT_THROW(CornerTree(3, 0, {{0, 1, L::NE}, {1, 2, L::NE}, {0, 2, L::SW}}), Error);
  EXPECT_THROW(CornerTree(2, 5, {{0, 1, L::NE}}), Error);
  CornerTree t(3, 1, {{1, 0, L::SW}, {1, 2, L::NE}});
  EXPECT_EQ(t.root(), 1);
  EXPECT_EQ(t.parent(0), 1);
  EXPECT_EQ(t.label(2), L::NE);
  auto order = t.post_order();
  EXPECT_EQ(order.back(), 1);
}

TEST(CornerLabel, Parsing) {
  for (auto l : {L::NE, L::NW, L::SE, L::SW}) EXPECT_EQ(parse_corner_label(to_string(l)), l);
  EXPECT_THROW(parse_corner_label("XX"), Error);
  EXPECT_EQ(make_corner_label(true, true), L::SW);
  EXPECT_EQ(make_corner_label(false, false), L::NE);
}

TEST(CtToPolytree, FigureExample) {
  // root 0, NE child 1, NW child 2, whose children are 3 (SW) and 4 (NW)
  CornerTree ct(5, 0, {{0, 1, L::NE}, {0, 2, L::NW}, {2, 3, L::SW}, {2, 4, L::NW}});
  SNPolytree want(5, {{1, 0, SNLabel::S}, {0, 2, SNLabel::N}, {2, 3, SNLabel::S}, {2, 4, SNLabel::N}});
  EXPECT_EQ(ct_to_snpolytree(ct), want);
}

TEST(CtToPolytree, SingleNodeAndEdge) {
  EXPECT_EQ(ct_to_snpolytree(CornerTree()).size(), 1);
  // NE child sits east and north: the parent is the west end and lies to the south
  CornerTree ne(2, 0, {{0, 1, L::NE}});
  EXPECT_EQ(ct_to_snpolytree(ne), SNPolytree(2, {{1, 0, SNLabel::S}}));
  EXPECT_EQ(snpolytree_to_ct(ct_to_snpolytree(ne), 0), ne);
}

TEST(PolytreeToCt, ThreeRootings) {
  auto t = cherry_polytree();
  EXPECT_EQ(snpolytree_to_ct(t, 2), CornerTree(3, 2, {{2, 0, L::NW}, {2, 1, L::NW}}));
  EXPECT_EQ(snpolytree_to_ct(t, 0), CornerTree(3, 0, {{0, 2, L::SE}, {2, 1, L::NW}}));
  EXPECT_EQ(snpolytree_to_ct(t, 1), CornerTree(3, 1, {{1, 2, L::SE}, {2, 0, L::NW}}));
  try {
    snpolytree_to_ct(t, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownNode);
  }
}

TEST(PolytreeToCt, RoundTrips) {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    auto ct = random_corner_tree(1 + rng() % 6, rng);
    EXPECT_EQ(snpolytree_to_ct(ct_to_snpolytree(ct), ct.root()), ct);
  }
  for (int trial = 0; trial < 100; ++trial) {
    auto t = random_snpolytree(1 + rng() % 6, rng);
    for (int v = 0; v < t.size(); ++v) EXPECT_EQ(ct_to_snpolytree(snpolytree_to_ct(t, v)), t);
  }
}

TEST(Theta, CherryPolytree) {
  auto d = snpolytree_to_dp(cherry_polytree());
  EXPECT_TRUE(d.west.less(0, 2));
  EXPECT_TRUE(d.west.less(1, 2));
  EXPECT_FALSE(d.west.comparable(0, 1));
  EXPECT_TRUE(d.south.less(2, 0));
  EXPECT_TRUE(d.south.less(2, 1));
  EXPECT_FALSE(d.south.comparable(0, 1));
  EXPECT_TRUE(classify(d).twin_tree);
}

TEST(Theta, SingleEdge) {
  auto d = snpolytree_to_dp(SNPolytree(2, {{0, 1, SNLabel::S}}));
  EXPECT_EQ(d.west.relation_size(), 1u);
  EXPECT_EQ(d.south.relation_size(), 1u);
  EXPECT_TRUE(d.west.less(1, 0));
  EXPECT_TRUE(d.south.less(1, 0));
}

TEST(Theta, RandomPolytreesAreTwinTrees) {
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    auto t = random_snpolytree(1 + rng() % 6, rng);
    auto d = snpolytree_to_dp(t);
    EXPECT_TRUE(classify(d).twin_tree);
    EXPECT_TRUE(isomorphic(snpolytree_to_dp(dp_to_snpolytree(d)), d));
    EXPECT_EQ(dp_to_snpolytree(d), t);
  }
}

TEST(ThetaInverse, PermutationCases) {
  auto id = dp_to_snpolytree(perm_to_dp(Permutation({1, 2})));
  ASSERT_EQ(id.edges().size(), 1u);
  EXPECT_EQ(id.edges()[0].label, SNLabel::S);
  EXPECT_EQ(dp_to_snpolytree(perm_to_dp(Permutation({2, 1}))).edges()[0].label, SNLabel::N);
  try {
    dp_to_snpolytree(perm_to_dp(Permutation({3, 1, 2})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotTwinTree);
  }
}

TEST(CornerTreeDp, AgreesWithPsiTheta) {
  Rng rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    auto ct = random_corner_tree(1 + rng() % 6, rng);
    EXPECT_EQ(corner_tree_to_dp(ct), snpolytree_to_dp(ct_to_snpolytree(ct)));
    EXPECT_EQ(dp_to_corner_tree(corner_tree_to_dp(ct), ct.root()), ct);
  }
}

TEST(Enumerate, ClassCounts) {
  const std::size_t expected[] = {0, 1, 2, 10, 52, 331, 2272};
  for (int k = 1; k <= 6; ++k) {
    auto all = enumerate_snpolytrees(k);
    EXPECT_EQ(all.size(), expected[k]) << k;
    std::set<CanonicalForm> forms;
    for (const auto& t : all) {
      auto d = snpolytree_to_dp(t);
      EXPECT_TRUE(classify(d).twin_tree);
      forms.insert(canonical_form(d));
    }
    EXPECT_EQ(forms.size(), all.size());
  }
  EXPECT_EQ(enumerate_snpolytrees(4), enumerate_snpolytrees(4));
  try {
    enumerate_snpolytrees(7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

// Class counts at k = 3 found by an independent route: all twin-tree double posets on
// 3 labeled elements built from pairs of orders, deduplicated by isomorphism.
TEST(Enumerate, MatchesLabeledSearchAtThree) {
  std::vector<StrictPoset> posets;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j) pairs.emplace_back(i, j);
    }
  }
  for (int mask = 0; mask < 64; ++mask) {
    std::vector<std::pair<int, int>> rel;
    for (int b = 0; b < 6; ++b) {
      if ((mask >> b) & 1) rel.push_back(pairs[b]);
    }
    try {
      auto p = StrictPoset::from_relation(3, rel);
      if (p.relation_size() == rel.size()) posets.push_back(p);
    } catch (const Error&) {
    }
  }
  std::vector<DoublePoset> reps;
  for (const auto& w : posets) {
    for (const auto& s : posets) {
      DoublePoset d(w, s);
      if (!classify(d).twin_tree) continue;
      bool seen = false;
      for (const auto& r : reps) seen = seen || isomorphic(r, d);
      if (!seen) reps.push_back(d);
    }
  }
  EXPECT_EQ(reps.size(), 10u);
}

TEST(Rerooting, CountsAgree) {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto t = random_snpolytree(1 + rng() % 5, rng);
    auto p = random_permutation(rng() % 10, rng);
    auto base = count_corner_tree<Int128>(p, snpolytree_to_ct(t, 0));
    for (int v = 1; v < t.size(); ++v) EXPECT_EQ(count_corner_tree<Int128>(p, snpolytree_to_ct(t, v)), base);
    EXPECT_EQ(base, Int128(static_cast<long long>(oracle::occurrence_count(snpolytree_to_dp(t), p))));
  }
}

#include <gtest/gtest.h>

#include "patterncount/errors.hpp"
#include "patterncount/io.hpp"
#include "patterncount/random.hpp"

using namespace patterncount;

namespace {

std::string data(const std::string& name) { return std::string(PATTERNCOUNT_DATA_DIR) + "/" + name; }

ErrorCode code_of(const std::string& text) {
  try {
    parse_tree_spec(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidInput;
}

std::string message_of(const std::string& text) {
  try {
    parse_tree_spec(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Permutations, ParseAndFormat) {
  EXPECT_EQ(parse_permutation("2 3 1\n5 4  6\n"), Permutation({2, 3, 1, 5, 4, 6}));
  EXPECT_EQ(parse_permutation(""), Permutation());
  EXPECT_EQ(format_permutation(Permutation({3, 1, 2})), "3 1 2\n");
  EXPECT_THROW(parse_permutation("1 x"), Error);
  EXPECT_THROW(parse_permutation("1 1"), Error);
  EXPECT_EQ(load_permutation(data("perm_231546.txt")), Permutation({2, 3, 1, 5, 4, 6}));
  EXPECT_THROW(load_permutation(data("missing.txt")), Error);
}

TEST(TreeSpec, DataFiles) {
  auto ct = load_tree_spec(data("corner_tree_se_ne_nw.json"));
  EXPECT_EQ(ct.type, TreeSpecType::CornerTree);
  ASSERT_TRUE(ct.corner.has_value());
  EXPECT_EQ(ct.corner->size(), 4);
  EXPECT_EQ(ct.node_names[0], "r");

  auto pt = load_tree_spec(data("polytree_4.json"));
  EXPECT_EQ(pt.type, TreeSpecType::SNPolytree);
  EXPECT_TRUE(classify(pt.dp).twin_tree);

  auto arbo = load_tree_spec(data("arbo_ne_1.json"));
  EXPECT_EQ(arbo.type, TreeSpecType::ArboNE);
  ASSERT_TRUE(arbo.arbo.has_value());
  EXPECT_EQ(arbo.arbo->anchors().four, 4);

  auto bare = load_tree_spec(data("bare_3214.json"));
  EXPECT_EQ(bare.dp, bare_3214().dp());
}

TEST(TreeSpec, PolytreeHeadIsArrowTarget) {
  auto t = parse_tree_spec(R"({"type":"sn_polytree","nodes":["u","v"],"edges":[["u","v","S"]]})");
  // v is the head: west and south of u
  EXPECT_TRUE(t.dp.west.less(1, 0));
  EXPECT_TRUE(t.dp.south.less(1, 0));
}

TEST(TreeSpec, DoublePosetIsClosedOnLoad) {
  auto t = parse_tree_spec(R"({"type":"double_poset","n":3,"west":[[0,1],[1,2]],"south":[]})");
  EXPECT_TRUE(t.dp.west.less(0, 2));
  EXPECT_EQ(t.type, TreeSpecType::DoublePoset);
}

TEST(TreeSpec, ArboWithoutTwo) {
  auto t = parse_tree_spec(
      R"({"type":"arbo_ne","n":3,"west":[[0,1],[0,2],[1,2]],"south":[[1,0],[0,2],[1,2]],)"
      R"("anchors":{"one":0,"two":null,"three":1,"four":2}})");
  ASSERT_TRUE(t.arbo.has_value());
  EXPECT_FALSE(t.arbo->anchors().two.has_value());
}

TEST(TreeSpec, InvalidArboCanBeLoadedUnvalidated) {
  const std::string text =
      R"({"type":"arbo_ne","n":4,"west":[[0,1],[1,2],[2,3]],"south":[[0,1],[1,2],[2,3]],)"
      R"("anchors":{"one":0,"two":1,"three":2,"four":3}})";
  EXPECT_EQ(code_of(text), ErrorCode::InvalidArbo);
  auto t = parse_tree_spec(text, false);
  EXPECT_FALSE(t.arbo.has_value());
  ASSERT_TRUE(t.anchors.has_value());
  EXPECT_EQ(t.anchors->three, 2);
}

TEST(TreeSpec, ErrorsCarryFieldContext) {
  EXPECT_EQ(code_of("{"), ErrorCode::ParseError);
  EXPECT_EQ(code_of(R"({"type":"tree"})"), ErrorCode::ParseError);
  EXPECT_NE(message_of(R"({"type":"corner_tree","nodes":["a"],"root":"b","edges":[]})").find("root"), std::string::npos);
  EXPECT_NE(message_of(R"({"type":"corner_tree","nodes":["a","b"],"root":"a","edges":[["a","b","UP"]]})")
                .find("edges[0][2]"),
            std::string::npos);
  EXPECT_NE(message_of(R"({"type":"double_poset","n":2,"west":[[0,5]],"south":[]})").find("west[0]"),
            std::string::npos);
  EXPECT_NE(message_of(R"({"type":"sn_polytree","nodes":["a","b"],"edges":[["a","b","X"]]})").find("edges[0][2]"),
            std::string::npos);
  EXPECT_EQ(code_of(R"({"type":"double_poset","n":2,"west":[[0,1],[1,0]],"south":[]})"), ErrorCode::ParseError);
  EXPECT_EQ(code_of(R"({"type":"corner_tree","nodes":["a","a"],"root":"a","edges":[]})"), ErrorCode::ParseError);
}

TEST(TreeSpec, RoundTrips) {
  Rng rng(151);
  for (int trial = 0; trial < 50; ++trial) {
    auto ct = random_corner_tree(1 + rng() % 6, rng);
    auto back = parse_tree_spec(serialize(ct));
    ASSERT_TRUE(back.corner.has_value());
    EXPECT_EQ(*back.corner, ct);

    auto t = random_snpolytree(1 + rng() % 6, rng);
    auto tb = parse_tree_spec(serialize(t));
    ASSERT_TRUE(tb.polytree.has_value());
    EXPECT_EQ(*tb.polytree, t);

    auto d = random_double_poset(1 + rng() % 6, 0.4, rng);
    EXPECT_EQ(parse_tree_spec(serialize(d)).dp, d);

    auto a = random_arbo(3 + rng() % 5, rng);
    auto ab = parse_tree_spec(serialize(a));
    ASSERT_TRUE(ab.arbo.has_value());
    EXPECT_EQ(ab.arbo->dp(), a.dp());
    EXPECT_EQ(ab.arbo->anchors().two, a.anchors().two);
  }
  auto spec = load_tree_spec(data("polytree_4.json"));
  EXPECT_TRUE(isomorphic(parse_tree_spec(serialize(spec)).dp, spec.dp));
}

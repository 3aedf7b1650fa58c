#include <gtest/gtest.h>

#include <set>

#include "fpl/index.hpp"

using fpl::Index;

TEST(Index, WeightAndDepth) {
  EXPECT_EQ(Index({2, 1}).weight(), 3);
  EXPECT_EQ(Index({1}).weight(), 1);
  EXPECT_EQ(Index::parse("{1}^5").weight(), 5);
  EXPECT_EQ(Index({2, 1}).depth(), 2);
  EXPECT_EQ(Index({1}).depth(), 1);
  EXPECT_EQ(Index::parse("{2}^3").depth(), 3);
}

TEST(Index, Parse) {
  EXPECT_EQ(Index::parse("2,1,1"), Index({2, 1, 1}));
  EXPECT_EQ(Index::parse("(2,{1}^3)"), Index({2, 1, 1, 1}));
  EXPECT_EQ(Index::parse("{1}^4"), Index({1, 1, 1, 1}));
  EXPECT_EQ(Index({3, 1}).str(), "(3,1)");
  EXPECT_THROW(Index::parse(""), std::invalid_argument);
  EXPECT_THROW(Index::parse("2,0"), std::invalid_argument);
  EXPECT_THROW(Index::parse("2,x"), std::invalid_argument);
  EXPECT_THROW(Index(std::vector<int>{}), std::invalid_argument);
}

TEST(Index, Words) {
  EXPECT_EQ(fpl::to_word(Index({2, 1})).str(), "011");
  EXPECT_EQ(fpl::to_word(Index({1})).str(), "1");
  EXPECT_EQ(fpl::from_word(fpl::Word("0011")), Index({3, 1}));
  EXPECT_THROW(fpl::from_word(fpl::Word("10")), std::invalid_argument);
  for (int w = 1; w <= 8; ++w) {
    for (const auto& k : fpl::compositions(w)) EXPECT_EQ(fpl::from_word(fpl::to_word(k)), k);
  }
}

TEST(Index, HoffmanDualExamples) {
  for (auto dual : {fpl::hoffman_dual, fpl::hoffman_dual_powerset}) {
    EXPECT_EQ(dual(Index({2})), Index({1, 1}));
    EXPECT_EQ(dual(Index({1, 2})), Index({2, 1}));
    EXPECT_EQ(dual(Index({1})), Index({1}));
    EXPECT_EQ(dual(Index({5})), Index::parse("{1}^5"));
    // (k1,k2) -> ({1}^{k1-1}, 2, {1}^{k2-1})
    EXPECT_EQ(dual(Index({3, 2})), Index({1, 1, 2, 1}));
    // (k1,k2,k3) -> ({1}^{k1-1}, 2, {1}^{k2-2}, 2, {1}^{k3-1}), k2 >= 2
    EXPECT_EQ(dual(Index({2, 3, 1})), Index({1, 2, 1, 2}));
  }
}

TEST(Index, HoffmanDualProperties) {
  for (int w = 1; w <= 12; ++w) {
    std::set<Index> image;
    for (const auto& k : fpl::compositions(w)) {
      const Index d = fpl::hoffman_dual(k);
      ASSERT_EQ(d, fpl::hoffman_dual_powerset(k)) << k.str();
      EXPECT_EQ(fpl::hoffman_dual(d), k);
      EXPECT_EQ(d.weight(), w);
      EXPECT_EQ(d.depth() + k.depth(), w + 1);
      EXPECT_EQ(fpl::hoffman_dual(fpl::reverse(k)), fpl::reverse(d));
      image.insert(d);
    }
    EXPECT_EQ(image.size(), std::size_t{1} << (w - 1));
  }
}

TEST(Index, Operators) {
  EXPECT_EQ(fpl::reverse(Index({2, 1})), Index({1, 2}));
  EXPECT_EQ(fpl::oplus(Index({1, 1}), fpl::unit_index(1, 2)), Index({2, 1}));
  EXPECT_EQ(fpl::concat(Index({1}), Index({2, 1})), Index({1, 2, 1}));
  EXPECT_EQ(fpl::repeat(Index({2}), 3), Index({2, 2, 2}));
  EXPECT_THROW(fpl::oplus(Index({1, 1}), Index({1})), std::invalid_argument);
  EXPECT_EQ(fpl::compositions(4).size(), 8u);
}

#include <gtest/gtest.h>

#include "kgraph/degree.hpp"
#include "kgraph/error.hpp"

using namespace kgraph;

TEST(Degree, OrderAndJoin) {
  const Degree a{1, 0, 2};
  const Degree b{0, 1, 1};
  EXPECT_TRUE(Degree({0, 0, 1}).leq(a));
  EXPECT_FALSE(b.leq(a));
  EXPECT_EQ(a.join(b), Degree({1, 1, 2}));
  EXPECT_EQ(a + b, Degree({1, 1, 3}));
  EXPECT_EQ(a - Degree({1, 0, 1}), Degree({0, 0, 1}));
  EXPECT_EQ(a.total(), 3u);
}

TEST(Degree, SubtractionNeedsOrder) {
  EXPECT_THROW(Degree({1, 0}) - Degree({0, 1}), Error);
}

TEST(Degree, RankMismatch) {
  try {
    (void)Degree({1, 0}).join(Degree({1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RankMismatch);
  }
}

TEST(Degree, UnitsAndSupport) {
  EXPECT_EQ(Degree::unit(3, 2), Degree({0, 1, 0}));
  EXPECT_THROW(Degree::unit(3, 0), Error);
  EXPECT_THROW(Degree::unit(3, 4), Error);
  EXPECT_EQ(Degree({1, 0, 1}).unit_support(), (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(Degree({1}).concat(Degree({0, 1})), Degree({1, 0, 1}));
}

TEST(Degree, DegreesBelowCountsBox) {
  const auto all = degrees_below(Degree{2, 1, 3});
  EXPECT_EQ(all.size(), 3u * 2u * 4u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  for (const auto& d : all) EXPECT_TRUE(d.leq(Degree{2, 1, 3}));
  EXPECT_EQ(degrees_below(Degree(0)).size(), 1u);
}

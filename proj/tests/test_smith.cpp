#include <gtest/gtest.h>

#include <grasscw/smith.hpp>

using namespace grasscw;

namespace {

IntMatrix from(std::vector<std::vector<std::int64_t>> rows) {
  IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) m(r, c) = rows[r][c];
  return m;
}

}  // namespace

TEST(Smith, SmallExamples) {
  EXPECT_EQ(smith_normal_form(from({{1, 2}, {3, 4}})), (std::vector<BigInt>{1, 2}));
  EXPECT_EQ(smith_normal_form(from({{2, 0}, {0, 3}})), (std::vector<BigInt>{1, 6}));
  EXPECT_EQ(smith_normal_form(from({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})), (std::vector<BigInt>{2, 6, 12}));
  EXPECT_EQ(smith_normal_form(from({{0, 0}, {0, 0}})), (std::vector<BigInt>{}));
  EXPECT_EQ(smith_normal_form(IntMatrix(0, 3)), (std::vector<BigInt>{}));
  EXPECT_EQ(smith_normal_form(from({{2, 2}})), (std::vector<BigInt>{2}));
}

TEST(Smith, OverflowFallsBackToBigIntegers) {
  const std::int64_t big = std::int64_t{1} << 40;
  const auto f = smith_normal_form(from({{big, 0}, {0, big + 1}}));
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], 1);
  EXPECT_EQ(f[1], BigInt(big) * BigInt(big + 1));
}

TEST(Smith, RankModTwo) {
  EXPECT_EQ(rank_mod2(from({{1, 2}, {3, 4}})), 1);
  EXPECT_EQ(rank_mod2(from({{2, 0}, {0, 2}})), 0);
  EXPECT_EQ(rank_mod2(from({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})), 2);
  EXPECT_EQ(rank_mod2(from({{-1, 0}, {0, 3}})), 2);
}

TEST(Smith, Multiply) {
  const auto p = multiply(from({{1, 2}, {3, 4}}), from({{0, 1}, {1, 0}}));
  EXPECT_EQ(p.data, (std::vector<std::int64_t>{2, 1, 4, 3}));
  EXPECT_TRUE(from({{0, 0}}).is_zero());
}

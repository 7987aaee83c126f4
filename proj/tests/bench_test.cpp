#include "cftft/bench.hpp"

#include <gtest/gtest.h>

namespace cftft {
namespace {

TEST(SweepGrid, PaperShapedDefaultGrid) {
  const auto grid = sweep_grid(512, 16384, 5);
  ASSERT_FALSE(grid.empty());
  EXPECT_EQ(grid.front(), 512u);
  EXPECT_EQ(grid.back(), 16384u);
  for (std::size_t i = 1; i < grid.size(); ++i) ASSERT_LT(grid[i - 1], grid[i]);
  // 5% steps from 512 to 16384 span a factor 32, about log(32)/log(1.05) points.
  EXPECT_GT(grid.size(), 60u);
  EXPECT_LT(grid.size(), 80u);
}

TEST(SweepGrid, SinglePointAndDegenerateRanges) {
  EXPECT_EQ(sweep_grid(100, 100, 5), (std::vector<u64>{100}));
  EXPECT_EQ(sweep_grid(1, 2, 50), (std::vector<u64>{1, 2}));
  EXPECT_THROW(sweep_grid(10, 5, 5), InvalidParams);
  EXPECT_THROW(sweep_grid(0, 5, 5), InvalidParams);
}

TEST(SweepGrid, DeduplicatesAfterRounding) {
  // From 10 at 1% the rounded values repeat until the step exceeds one.
  const auto grid = sweep_grid(10, 40, 1);
  for (std::size_t i = 1; i < grid.size(); ++i) ASSERT_LT(grid[i - 1], grid[i]);
  EXPECT_EQ(grid.front(), 10u);
  EXPECT_EQ(grid.back(), 40u);
}

TEST(BenchPoint, FullLengthProductUsesThreeFullTransforms) {
  const RingCtx ctx(RingCtx::kGoldilocks, 32);
  for (SplitPolicy policy : {SplitPolicy::balanced, SplitPolicy::radix2}) {
    const auto rec = bench_point(ctx, 512, policy, 1, 42);
    EXPECT_EQ(rec.transform_length, 512u);
    EXPECT_EQ(rec.butterflies, 3 * 512 * 9 / 2);  // three full transforms
    EXPECT_TRUE(bench_record_ok(rec));
  }
}

TEST(BenchPoint, ButterfliesAreDeterministicGivenTheSeed) {
  const RingCtx ctx(RingCtx::kGoldilocks, 32);
  const auto a = bench_point(ctx, 300, SplitPolicy::balanced, 1, 7);
  const auto b = bench_point(ctx, 300, SplitPolicy::balanced, 2, 7);
  EXPECT_EQ(a.butterflies, b.butterflies);
  EXPECT_EQ(a.transform_length, b.transform_length);
  EXPECT_EQ(a.transform_length, 512u);
  EXPECT_TRUE(bench_record_ok(a));
}

TEST(MedianNs, OddAndEvenSampleCounts) {
  EXPECT_EQ(median_ns({5}), 5u);
  EXPECT_EQ(median_ns({3, 9, 5}), 5u);
  EXPECT_EQ(median_ns({4, 8}), 6u);
  EXPECT_EQ(median_ns({10, 2, 8, 4}), 6u);
}

}  // namespace
}  // namespace cftft

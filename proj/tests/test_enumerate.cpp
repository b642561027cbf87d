#include "oracle.hpp"
#include "sgforge/enumerate.hpp"
#include "sgforge/error.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <mutex>
#include <set>

using sgforge::NumericalSemigroup;

namespace {

TEST(Enumerate, CountsMatchGapSetBruteForce) {
  const auto expected = oracle::genus_counts(9);
  const auto counts = sgforge::enumerate_by_genus_serial(9, [](const NumericalSemigroup&) { return true; });
  EXPECT_EQ(counts, expected);
  EXPECT_EQ(expected, (std::vector<std::size_t>{1, 1, 2, 4, 7, 12, 23, 39, 67, 118}));
}

TEST(Enumerate, KnownCountsFurtherOut) {
  const auto counts = sgforge::enumerate_by_genus_serial(18, [](const NumericalSemigroup&) { return true; });
  EXPECT_EQ(counts[10], 204u);
  EXPECT_EQ(counts[11], 343u);
  EXPECT_EQ(counts[12], 592u);
  EXPECT_EQ(counts[13], 1001u);
  EXPECT_EQ(counts[14], 1693u);
  EXPECT_EQ(counts[15], 2857u);
  EXPECT_EQ(counts[16], 4806u);
  EXPECT_EQ(counts[17], 8045u);
  EXPECT_EQ(counts[18], 13467u);
}

TEST(Enumerate, DfsOrderIsLexicographicInGaps) {
  const auto all = sgforge::collect_by_genus(9);
  for (std::size_t i = 1; i < all.size(); ++i) {
    EXPECT_LT(all[i - 1].gaps(), all[i].gaps());
  }
  std::set<std::vector<int>> distinct;
  for (const auto& h : all) distinct.insert(h.gaps());
  EXPECT_EQ(distinct.size(), all.size());
}

TEST(Enumerate, ChildrenRemoveGeneratorsAboveFrobenius) {
  const auto h = NumericalSemigroup::from_generators({3, 4, 5});
  const auto kids = sgforge::genus_tree_children(h);
  ASSERT_EQ(kids.size(), 3u);
  for (const auto& k : kids) {
    EXPECT_EQ(k.genus(), h.genus() + 1);
    EXPECT_GT(k.frobenius(), h.frobenius());
  }
  EXPECT_TRUE(sgforge::genus_tree_children(NumericalSemigroup::from_generators({3, 4})).empty());
}

TEST(Enumerate, EarlyStop) {
  std::size_t seen = 0;
  sgforge::enumerate_by_genus_serial(10, [&](const NumericalSemigroup&) { return ++seen < 5; });
  EXPECT_EQ(seen, 5u);
}

TEST(Enumerate, NegativeGenusRejected) {
  EXPECT_THROW(sgforge::enumerate_by_genus_serial(-1, [](const NumericalSemigroup&) { return true; }),
               sgforge::InvalidArgument);
}

class ParallelEnumerate : public ::testing::TestWithParam<int> {};

TEST_P(ParallelEnumerate, SameMultisetAsSerial) {
  const int jobs = GetParam();
  std::vector<std::vector<int>> serial;
  const auto serial_counts = sgforge::enumerate_by_genus_serial(12, [&](const NumericalSemigroup& h) {
    serial.push_back(h.gaps());
    return true;
  });
  std::mutex mu;
  std::vector<std::vector<int>> parallel;
  const auto parallel_counts = sgforge::enumerate_by_genus(
      12,
      [&](const NumericalSemigroup& h) {
        auto g = h.gaps();
        std::lock_guard lock(mu);
        parallel.push_back(std::move(g));
      },
      jobs);
  EXPECT_EQ(parallel_counts, serial_counts);
  std::sort(parallel.begin(), parallel.end());
  EXPECT_EQ(parallel, serial);  // serial order is already sorted
}

INSTANTIATE_TEST_SUITE_P(Jobs, ParallelEnumerate, ::testing::Values(1, 2, 3, 8));

TEST(Enumerate, SmallGenusBoundsInParallel) {
  for (int g = 0; g <= 3; ++g) {
    const auto counts = sgforge::enumerate_by_genus(g, [](const NumericalSemigroup&) {}, 4);
    EXPECT_EQ(counts, oracle::genus_counts(g));
  }
}

}  // namespace

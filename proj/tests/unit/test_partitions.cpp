#include <gtest/gtest.h>

#include <set>

#include "opmono/partitions.hpp"

using namespace opmono;

namespace {

// Independent filter oracle: all set partitions without a crossing pair.
std::size_t nc_by_filter(int n) {
  std::size_t count = 0;
  for (const auto& p : set_partitions(n)) {
    bool ok = true;
    for (std::size_t a = 0; a < p.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < p.size() && ok; ++b) ok = !crosses(p.blocks()[a], p.blocks()[b]);
    }
    count += ok;
  }
  return count;
}

}  // namespace

TEST(Partitions, NonCrossingCounts) {
  const std::size_t catalan[] = {1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(nc_by_filter(n), catalan[n - 1]);
    EXPECT_EQ(enumerate(PartitionKind::NonCrossing, n).size(), catalan[n - 1]);
  }
}

TEST(Partitions, KindsAndErrors) {
  EXPECT_EQ(enumerate(PartitionKind::Monotone, 1), (std::vector<BlockList>{{{1}}}));
  EXPECT_EQ(enumerate(PartitionKind::Monotone, 3).size(), 12u);
  EXPECT_EQ(enumerate(PartitionKind::IntervalBlocks, 4).size(), 10u);
  EXPECT_EQ(enumerate(PartitionKind::All, 5).size(), 52u);  // Bell
  EXPECT_EQ(enumerate(PartitionKind::Ordered, 3).size(), 13u);  // Fubini
  EXPECT_EQ(enumerate(PartitionKind::MonotonePair, 4).size(), 3u);
  EXPECT_THROW(enumerate(PartitionKind::MonotonePair, 3), std::domain_error);
  EXPECT_THROW(enumerate(PartitionKind::All, 0), std::domain_error);
}

TEST(Partitions, MonotoneCountMatchesLinearExtensions) {
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t total = 0;
    for (const auto& p : noncrossing_partitions(n)) total += count_linear_extensions(p);
    EXPECT_EQ(monotone_partitions(n).size(), total) << n;
  }
}

TEST(Partitions, EnumerationIsSortedAndUnique) {
  for (auto kind : {PartitionKind::All, PartitionKind::NonCrossing, PartitionKind::Ordered, PartitionKind::Monotone}) {
    const auto v = enumerate(kind, 4);
    EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
    EXPECT_EQ(std::set<BlockList>(v.begin(), v.end()).size(), v.size());
  }
}

TEST(Partitions, Validation) {
  EXPECT_THROW(validate_block({}), std::invalid_argument);
  EXPECT_THROW(validate_block({2, 1}), std::invalid_argument);
  EXPECT_THROW(validate_block({0, 1}), std::invalid_argument);
  EXPECT_THROW(SetPartition(3, {{1, 2}, {2, 3}}), std::invalid_argument);
  EXPECT_THROW(SetPartition(3, {{1, 2}}), std::invalid_argument);
  EXPECT_THROW(MonotonePartition(OrderedPartition(3, {{2}, {1, 3}})), std::invalid_argument);
  EXPECT_THROW(MonotonePartition(OrderedPartition(4, {{1, 3}, {2, 4}})), std::invalid_argument);
  EXPECT_NO_THROW(MonotonePartition(OrderedPartition(3, {{1, 3}, {2}})));
}

TEST(Partitions, Nesting) {
  EXPECT_TRUE(nests({4, 5, 6}, {3, 8, 10}));
  EXPECT_FALSE(nests({1}, {2, 3}));
  EXPECT_TRUE(nests({2}, {1, 3}));
  EXPECT_THROW(nests({1, 2}, {2, 3}), std::domain_error);
}

TEST(Partitions, ElevenPointExampleIsMonotone) {
  EXPECT_TRUE(is_monotone(OrderedPartition(11, {{2, 11}, {3, 8, 10}, {9}, {7}, {1}, {4, 5, 6}})));
  // Swapping an inner block before its outer one breaks monotonicity.
  EXPECT_FALSE(is_monotone(OrderedPartition(11, {{3, 8, 10}, {2, 11}, {9}, {7}, {1}, {4, 5, 6}})));
}

TEST(Partitions, InterpolationBlocks) {
  using V = std::vector<std::vector<int>>;
  EXPECT_EQ(interpolation_blocks({2, 3, 4, 6}, {1, 2, 3, 4, 5, 6}).blocks, (V{{1}, {}, {}, {5}, {}}));
  EXPECT_EQ(interpolation_blocks({3, 4, 7}, {1, 2, 3, 4, 6, 7, 8}).blocks, (V{{1, 2}, {}, {6}, {8}}));
  EXPECT_EQ(interpolation_blocks({}, {1, 2, 3}).blocks, (V{{1, 2, 3}}));
  EXPECT_THROW(interpolation_blocks({9}, {1, 2}), std::domain_error);
}

TEST(Partitions, OrderedFromSequence) {
  const std::vector<int> a{1, 1, 1}, b{3, 1, 2}, c{2, 1, 2};
  EXPECT_EQ(ordered_from_sequence(a).blocks(), (BlockList{{1, 2, 3}}));
  EXPECT_EQ(ordered_from_sequence(b).blocks(), (BlockList{{1}, {3}, {2}}));
  EXPECT_EQ(ordered_from_sequence(c).blocks(), (BlockList{{1, 3}, {2}}));
  EXPECT_THROW(ordered_from_sequence(std::vector<int>{}), std::domain_error);
}

TEST(QMap, NestedBlockListedFirst) {
  EXPECT_EQ(q_map(OrderedPartition(7, {{2, 6}, {1, 3, 4}, {5, 7}})).blocks(),
            (BlockList{{1}, {2, 6}, {3, 4}, {5}, {7}}));
}

TEST(QMap, OuterBlockListedFirst) {
  EXPECT_EQ(q_map(OrderedPartition(7, {{1, 3, 4}, {2, 6}, {5, 7}})).blocks(),
            (BlockList{{1, 3, 4}, {2}, {5}, {6}, {7}}));
}

// The reference golden for this input. Both orientations of the cutting
// procedure disagree with it; kept as stated.
TEST(QMap, ReferenceGolden) {
  EXPECT_EQ(q_map(OrderedPartition(7, {{1, 3, 4}, {5, 7}, {2, 6}})).blocks(),
            (BlockList{{1}, {2, 6}, {3, 4}, {5}, {7}}));
}

TEST(QMap, ImageIsNonCrossingAndOnto) {
  for (int n = 1; n <= 5; ++n) {
    std::set<SetPartition> image;
    for (const auto& p : ordered_partitions(n)) {
      const SetPartition q = q_map(p);
      EXPECT_TRUE(q.is_noncrossing());
      image.insert(q);
    }
    EXPECT_EQ(image.size(), noncrossing_partitions(n).size());
  }
}

TEST(QMap, FixesMonotonePartitions) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& p : monotone_partitions(n)) EXPECT_EQ(q_map(p), p.underlying());
  }
}

TEST(APi, SmallCases) {
  EXPECT_EQ(a_pi_count(SetPartition(1, {{1}}), 5), 5u);
  for (int N = 0; N <= 4; ++N) {
    EXPECT_EQ(a_pi_count(SetPartition(2, {{1, 2}}), N), static_cast<std::uint64_t>(N));
    EXPECT_EQ(a_pi_count(SetPartition(2, {{1}, {2}}), N), static_cast<std::uint64_t>(N * N - N));
  }
  EXPECT_EQ(a_pi_count(SetPartition(3, {{1, 3}, {2}}), 0), 0u);
  EXPECT_THROW(a_pi_count(SetPartition(4, {{1, 3}, {2, 4}}), 2), std::domain_error);
}

TEST(APi, SumsToPowerAndMatchesTable) {
  for (int n = 1; n <= 4; ++n) {
    const auto& table = factorization_table(n);
    for (int N = 0; N <= 4; ++N) {
      std::uint64_t total = 0, power = 1;
      for (int j = 0; j < n; ++j) power *= N;
      for (std::size_t s = 0; s < table.partitions.size(); ++s) {
        const auto c = a_pi_count(table.partitions[s], N);
        total += c;
        EXPECT_EQ(table.a_pi(s, N), Rational(static_cast<long>(c)));
      }
      EXPECT_EQ(total, power);
    }
  }
}

TEST(MonotoneWeights, ThreePoints) {
  // Undoing the 1/|pi|! grouping recovers |M(3)| = 12.
  const auto& w = monotone_weights(3);
  Rational total(0);
  for (std::size_t i = 0; i < w.partitions.size(); ++i) {
    total += w.weights[i] * factorial(static_cast<long>(w.partitions[i].size()));
  }
  EXPECT_EQ(total, Rational(12));
}

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "yiqmark/error.hpp"
#include "yiqmark/keystream.hpp"

namespace yiqmark {
namespace {

// FNV-1a over the chips mapped to {0, 1}.
std::uint64_t fingerprint(const ChipSequence& chips) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (int c : chips) {
    h ^= c > 0 ? 1u : 0u;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Golden values come from a separate straight-line implementation of the
// xorshift64* recurrence.
TEST(Keystream, GoldenVectorsShort) {
  EXPECT_EQ(pn_bits(15, 7), (ChipSequence{1, 1, -1, 1, -1, -1, -1}));
  EXPECT_EQ(pn_bits(1, 7), (ChipSequence{-1, 1, 1, -1, -1, 1, 1}));
  EXPECT_EQ(pn_bits(1ULL << 63, 7), (ChipSequence{1, 1, 1, -1, -1, 1, 1}));
  EXPECT_EQ(pn_bits(0, 7), (ChipSequence{-1, -1, 1, -1, 1, 1, 1}));
}

TEST(Keystream, GoldenVectorsLong) {
  struct Golden {
    std::uint64_t seed;
    std::int64_t sum;
    std::uint64_t hash;
  };
  for (const Golden& g : {Golden{1, -56, 0x7ab162ca310ad05dULL},
                          Golden{15, -40, 0x627c080a94a958fbULL},
                          Golden{1ULL << 63, -16, 0x5a1f0d9f9eebe3a5ULL}}) {
    const ChipSequence chips = pn_bits(g.seed, 4096);
    EXPECT_EQ(std::accumulate(chips.begin(), chips.end(), std::int64_t{0}), g.sum);
    EXPECT_EQ(fingerprint(chips), g.hash);
  }
}

TEST(Keystream, ZeroSeedIsRemapped) {
  EXPECT_EQ(pn_bits(0, 64), pn_bits(PnGenerator::kZeroSeedReplacement, 64));
  PnGenerator gen(0);
  EXPECT_NE(gen.state(), 0u);
}

TEST(Keystream, DeterministicAndBipolar) {
  const ChipSequence a = pn_bits(123456789, 1000);
  EXPECT_EQ(a, pn_bits(123456789, 1000));
  for (int c : a) ASSERT_TRUE(c == 1 || c == -1);
}

TEST(Keystream, ChipBalance) {
  const ChipSequence chips = pn_bits(2024, 1'000'000);
  const double mean =
      std::accumulate(chips.begin(), chips.end(), 0.0) / static_cast<double>(chips.size());
  EXPECT_LT(std::abs(mean), 0.01);
}

TEST(Keystream, PairIsTwoConsecutiveWindows) {
  const PnPair p = pn_pair(15, 7);
  EXPECT_EQ(p.pn0, (ChipSequence{1, 1, -1, 1, -1, -1, -1}));
  EXPECT_EQ(p.pn1, (ChipSequence{-1, -1, -1, 1, 1, 1, -1}));
}

TEST(Keystream, PairAlwaysDistinctAndNearlyOrthogonal) {
  PnGenerator seeds(31337);
  double mean_abs_dot = 0.0;
  constexpr int kTrials = 10000;
  for (int t = 0; t < kTrials; ++t) {
    const PnPair p = pn_pair(seeds.next(), 7);
    ASSERT_NE(p.pn0, p.pn1);
    int dot = 0;
    for (int i = 0; i < 7; ++i) dot += p.pn0[i] * p.pn1[i];
    mean_abs_dot += std::abs(dot);
  }
  mean_abs_dot /= kTrials;
  EXPECT_LT(mean_abs_dot, 7.0 / 2.0);
}

TEST(Keystream, PairSkipsCollidingWindow) {
  // Length 1 collides half the time; the second window must still differ.
  for (std::uint64_t seed = 1; seed < 200; ++seed) {
    const PnPair p = pn_pair(seed, 1);
    ASSERT_NE(p.pn0, p.pn1);
  }
}

TEST(Keystream, ScrambleBranches) {
  KeySchedule ks{};
  ks.count_a = 3;
  ks.count_b = 5;
  ks.threshold = -(4096 + 1);
  EXPECT_EQ(scramble_iterations(ks, 4096, 48), 3u);
  ks.threshold = 4096 + 1;
  EXPECT_EQ(scramble_iterations(ks, 4096, 48), 5u);
}

TEST(Keystream, ScrambleIterationsGolden) {
  // Seed-15 sum over 4096 chips is -40, not above T = 0: branch B.
  const KeySchedule ks{15, 15, 0, 3, 5};
  EXPECT_EQ(scramble_iterations(ks, 4096, 48), 5u);
}

TEST(Keystream, ScrambleZeroRemainderMapsToPeriod) {
  const KeySchedule ks{15, 15, 4097, 3, 48};
  EXPECT_EQ(scramble_iterations(ks, 4096, 48), 48u);
  const KeySchedule wrap{15, 15, 4097, 3, 50};
  EXPECT_EQ(scramble_iterations(wrap, 4096, 48), 2u);
}

TEST(Keystream, EqualCountsRejected) {
  EXPECT_THROW(validate(KeySchedule{1, 1, 0, 4, 4}), Error);
  EXPECT_NO_THROW(validate(KeySchedule{}));
}

TEST(Keystream, UnitIntervalIsOpen) {
  PnGenerator gen(9);
  for (int i = 0; i < 100000; ++i) {
    const double u = gen.next_unit();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

}  // namespace
}  // namespace yiqmark

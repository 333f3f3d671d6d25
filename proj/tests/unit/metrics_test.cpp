#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "support/fixtures.hpp"
#include "yiqmark/error.hpp"
#include "yiqmark/metrics.hpp"

namespace yiqmark {
namespace {

TEST(Psnr, IdenticalIsInfinite) {
  const RgbImage a = testing::random_image(16, 16, 1);
  EXPECT_TRUE(std::isinf(psnr(a, a)));
  EXPECT_GT(psnr(a, a), 0.0);
}

TEST(Psnr, FullScaleDifferenceIsZeroDb) {
  EXPECT_NEAR(psnr(RgbImage(8, 8, Rgb{0, 0, 0}), RgbImage(8, 8, Rgb{255, 255, 255})), 0.0, 1e-12);
}

TEST(Psnr, SingleSampleOffByOne) {
  const RgbImage a(512, 512, Rgb{10, 10, 10});
  RgbImage b = a;
  b.at(100, 200).g = 11;
  // MSE = 1 / (3 * 512^2)
  const double expected = 10.0 * std::log10(65025.0 * 3.0 * 512.0 * 512.0);
  EXPECT_NEAR(psnr(a, b), expected, 1e-9);
  EXPECT_NEAR(psnr(a, b), 107.09, 0.005);
}

TEST(Psnr, SymmetricAndMonotone) {
  const RgbImage a = testing::random_image(32, 32, 2);
  double previous = INFINITY;
  for (int delta = 1; delta <= 20; ++delta) {
    RgbImage b = a;
    for (Rgb& p : b.pixels()) p.r = static_cast<std::uint8_t>((p.r + delta) % 256);
    EXPECT_DOUBLE_EQ(psnr(a, b), psnr(b, a));
    if (delta <= 5) {
      // Small offsets without wrap-around increase MSE strictly.
      RgbImage c(32, 32, Rgb{100, 100, 100});
      RgbImage d(32, 32, Rgb{std::uint8_t(100 + delta), 100, 100});
      const double v = psnr(c, d);
      EXPECT_LT(v, previous);
      previous = v;
    }
  }
}

TEST(Psnr, DimensionMismatch) {
  EXPECT_THROW(psnr(RgbImage(4, 4), RgbImage(4, 2)), Error);
}

TEST(Nc, SelfCorrelationIsOne) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    BitMatrix w = testing::random_bits(16, seed);
    if (w.popcount() == 0) w.at(0, 0) = 1;
    ASSERT_DOUBLE_EQ(nc(w, w), 1.0);
  }
}

TEST(Nc, ZeroDenominator) {
  EXPECT_EQ(nc(BitMatrix(64, 1), BitMatrix(64, 0)), 0.0);
  EXPECT_EQ(nc(BitMatrix(8, 0), BitMatrix(8, 0)), 0.0);
}

TEST(Nc, HalfOnes) {
  BitMatrix half(64);
  for (std::size_t y = 0; y < 32; ++y)
    for (std::size_t x = 0; x < 64; ++x) half.at(x, y) = 1;
  EXPECT_NEAR(nc(BitMatrix(64, 1), half), 2048.0 / (64.0 * std::sqrt(2048.0)), 1e-12);
  EXPECT_NEAR(nc(BitMatrix(64, 1), half), 0.70711, 1e-5);
}

TEST(Ber, Basics) {
  const BitMatrix w = testing::random_bits(32, 3);
  std::vector<std::uint8_t> inv(w.bits().begin(), w.bits().end());
  for (auto& b : inv) b ^= 1;
  const BitMatrix c(32, inv);
  EXPECT_EQ(ber(w, w), 0.0);
  EXPECT_EQ(ber(w, c), 1.0);
  std::vector<std::uint8_t> half(w.bits().begin(), w.bits().end());
  for (std::size_t k = 0; k < half.size(); k += 2) half[k] ^= 1;
  EXPECT_EQ(ber(w, BitMatrix(32, half)), 0.5);
  EXPECT_EQ(ber(w, BitMatrix(32, half)), ber(BitMatrix(32, half), w));
  EXPECT_THROW(ber(w, BitMatrix(31)), Error);
}

TEST(Histogram, BlackImage) {
  const Histogram h = histogram(RgbImage(10, 7), RgbChannel::R);
  EXPECT_EQ(h[0], 70u);
  EXPECT_EQ(std::accumulate(h.begin() + 1, h.end(), std::uint64_t{0}), 0u);
}

TEST(Histogram, TwoPixels) {
  RgbImage img(2, 1);
  img.at(1, 0).r = 255;
  const Histogram h = histogram(img, RgbChannel::R);
  EXPECT_EQ(h[0], 1u);
  EXPECT_EQ(h[255], 1u);
}

TEST(Histogram, SumsToPixelCount) {
  const RgbImage img = testing::random_image(33, 17, 5);
  for (RgbChannel c : {RgbChannel::R, RgbChannel::G, RgbChannel::B}) {
    const Histogram h = histogram(img, c);
    EXPECT_EQ(std::accumulate(h.begin(), h.end(), std::uint64_t{0}), 33u * 17u);
  }
}

}  // namespace
}  // namespace yiqmark

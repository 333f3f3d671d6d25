#include <gtest/gtest.h>

#include <cstdlib>

#include "support/fixtures.hpp"
#include "yiqmark/attacks.hpp"
#include "yiqmark/error.hpp"
#include "yiqmark/metrics.hpp"

namespace yiqmark {
namespace {

using testing::code_of;

int max_abs_diff(const RgbImage& a, const RgbImage& b) {
  int worst = 0;
  for (std::size_t k = 0; k < a.pixels().size(); ++k) {
    const Rgb p = a.pixels()[k], q = b.pixels()[k];
    worst = std::max({worst, std::abs(p.r - q.r), std::abs(p.g - q.g), std::abs(p.b - q.b)});
  }
  return worst;
}

const RgbImage& cover() {
  static const RgbImage img = testing::acceptance_covers(128)[2].image;
  return img;
}

TEST(Scale, FactorOneIsIdentity) { EXPECT_EQ(attack_scale(cover(), 1.0), cover()); }

TEST(Scale, KeepsShapeAndConstants) {
  const RgbImage flat(64, 48, Rgb{12, 200, 99});
  for (double f : {0.5, 0.3, 0.77}) {
    const RgbImage out = attack_scale(flat, f);
    EXPECT_EQ(out, flat);
  }
  const RgbImage out = attack_scale(cover(), 0.5);
  EXPECT_EQ(out.width(), cover().width());
  EXPECT_EQ(out.height(), cover().height());
  EXPECT_GT(psnr(cover(), out), 25.0);
}

TEST(Scale, InvalidFactors) {
  for (double f : {0.0, -0.5, 1.5}) {
    EXPECT_EQ(code_of([&] { attack_scale(cover(), f); }), ErrorCode::InvalidParam);
  }
  EXPECT_EQ(code_of([&] { attack_scale(RgbImage(4, 4), 0.1); }), ErrorCode::DegenerateSize);
}

TEST(Rotate, ZeroAndFullTurn) {
  EXPECT_EQ(attack_rotate(cover(), 0.0), cover());
  EXPECT_LE(max_abs_diff(attack_rotate(cover(), 360.0), cover()), 1);
}

TEST(Rotate, SmallAngleIsMildDamage) {
  const RgbImage flat(32, 32, Rgb{77, 88, 99});
  EXPECT_EQ(attack_rotate(flat, 2.0), flat);
  const RgbImage out = attack_rotate(cover(), 2.0);
  EXPECT_GT(psnr(cover(), out), 25.0);
  EXPECT_FALSE(std::isinf(psnr(cover(), out)));
}

TEST(Jpeg, QuantTableScaling) {
  const auto q50 = jpeg_quant_table(50);
  EXPECT_EQ(q50[0], 16);
  EXPECT_EQ(q50[63], 99);
  const auto q100 = jpeg_quant_table(100);
  for (int v : q100) EXPECT_EQ(v, 1);
  const auto q75 = jpeg_quant_table(75);
  EXPECT_EQ(q75[0], 8);  // 16 * 0.5
  const auto q10 = jpeg_quant_table(10);
  EXPECT_EQ(q10[0], 80);  // 16 * 5
  EXPECT_EQ(code_of([] { jpeg_quant_table(0); }), ErrorCode::InvalidParam);
  EXPECT_EQ(code_of([] { jpeg_quant_table(101); }), ErrorCode::InvalidParam);
}

TEST(Jpeg, QualityOrdering) {
  EXPECT_LE(max_abs_diff(attack_jpeg(cover(), 100), cover()), 2);
  const double p90 = psnr(cover(), attack_jpeg(cover(), 90));
  const double p30 = psnr(cover(), attack_jpeg(cover(), 30));
  EXPECT_GT(p90, p30);
}

TEST(Jpeg, ConstantImageSurvives) {
  // Only the DC term survives; its step at quality 10 is 80, i.e. 5 levels.
  const RgbImage flat(16, 16, Rgb{128, 128, 128});
  const RgbImage out = attack_jpeg(flat, 10);
  EXPECT_EQ(out, RgbImage(16, 16, out.at(0, 0)));
  EXPECT_LE(max_abs_diff(out, flat), 5);
}

TEST(Noise, ZeroParamsAreIdentity) {
  EXPECT_EQ(attack_noise(cover(), {AttackKind::GaussianNoise, 0.0, 3}), cover());
  EXPECT_EQ(attack_noise(cover(), {AttackKind::SaltPepper, 0.0, 3}), cover());
}

TEST(Noise, SeededAndDeterministic) {
  const AttackSpec g{AttackKind::GaussianNoise, 5.0, 9};
  EXPECT_EQ(attack_noise(cover(), g), attack_noise(cover(), g));
  AttackSpec other = g;
  other.rng_seed = 10;
  EXPECT_NE(attack_noise(cover(), g), attack_noise(cover(), other));
}

TEST(Noise, GaussianSigmaMatches) {
  const RgbImage flat(256, 256, Rgb{128, 128, 128});
  const RgbImage out = attack_noise(flat, {AttackKind::GaussianNoise, 5.0, 1});
  // sigma 5 -> MSE about 25 (rounding adds 1/12) -> about 34.1 dB.
  EXPECT_NEAR(psnr(flat, out), 10.0 * std::log10(65025.0 / (25.0 + 1.0 / 12.0)), 0.2);
}

TEST(Noise, SaltPepperFraction) {
  const RgbImage flat(200, 200, Rgb{100, 100, 100});
  const RgbImage out = attack_noise(flat, {AttackKind::SaltPepper, 0.1, 4});
  std::size_t hit = 0, white = 0;
  for (const Rgb& p : out.pixels()) {
    if (p.r == 100) continue;
    ++hit;
    EXPECT_TRUE((p == Rgb{0, 0, 0}) || (p == Rgb{255, 255, 255}));
    if (p.r == 255) ++white;
  }
  EXPECT_NEAR(static_cast<double>(hit) / 40000.0, 0.1, 0.01);
  EXPECT_NEAR(static_cast<double>(white) / static_cast<double>(hit), 0.5, 0.05);
}

TEST(Noise, InvalidParams) {
  EXPECT_EQ(code_of([] { attack_noise(RgbImage(4, 4), {AttackKind::GaussianNoise, -1.0, 1}); }),
            ErrorCode::InvalidParam);
  EXPECT_EQ(code_of([] { attack_noise(RgbImage(4, 4), {AttackKind::SaltPepper, 1.5, 1}); }),
            ErrorCode::InvalidParam);
}

TEST(ApplyAttack, Dispatch) {
  EXPECT_EQ(apply_attack(cover(), {AttackKind::Jpeg, 60, 1}), attack_jpeg(cover(), 60));
  EXPECT_EQ(apply_attack(cover(), {AttackKind::Scale, 0.5, 1}), attack_scale(cover(), 0.5));
  EXPECT_EQ(apply_attack(cover(), {AttackKind::Rotate, 2, 1}), attack_rotate(cover(), 2));
  EXPECT_EQ(code_of([] { apply_attack(RgbImage(8, 8), {AttackKind::Jpeg, 75.5, 1}); }),
            ErrorCode::InvalidParam);
}

TEST(ApplyAttack, Names) {
  for (AttackKind k : {AttackKind::Scale, AttackKind::Rotate, AttackKind::Jpeg,
                       AttackKind::GaussianNoise, AttackKind::SaltPepper}) {
    EXPECT_EQ(parse_attack_kind(to_string(k)), k);
  }
  EXPECT_FALSE(parse_attack_kind("blur").has_value());
}

}  // namespace
}  // namespace yiqmark

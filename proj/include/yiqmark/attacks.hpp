#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "yiqmark/image.hpp"

namespace yiqmark {

enum class AttackKind { Scale, Rotate, Jpeg, GaussianNoise, SaltPepper };

struct AttackSpec {
  AttackKind kind = AttackKind::Jpeg;
  double param = 75.0;
  std::uint64_t rng_seed = 1;  // noise attacks only
};

// Bilinear resample to round(factor * dim) and back, sampling grids aligned on
// the corner pixels. 0 < factor <= 1.
RgbImage attack_scale(const RgbImage& img, double factor);

// Bilinear rotation about the centre, then the inverse rotation, edge
// replication outside the frame. The extractor has no geometric
// synchronisation, so only resampling damage is measured.
RgbImage attack_rotate(const RgbImage& img, double degrees);

// 8x8 DCT quantisation of each YIQ plane with the scaled luminance table.
RgbImage attack_jpeg(const RgbImage& img, int quality);

// Gaussian noise (param = sigma) or salt-and-pepper (param = pixel fraction).
RgbImage attack_noise(const RgbImage& img, const AttackSpec& spec);

RgbImage apply_attack(const RgbImage& img, const AttackSpec& spec);

// Quantisation table for a quality in [1, 100], row-major 8x8.
std::array<int, 64> jpeg_quant_table(int quality);

std::string_view to_string(AttackKind kind) noexcept;
std::optional<AttackKind> parse_attack_kind(std::string_view name) noexcept;

}  // namespace yiqmark

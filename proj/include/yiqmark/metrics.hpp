#pragma once

#include <array>
#include <cstdint>

#include "yiqmark/arnold.hpp"
#include "yiqmark/image.hpp"

namespace yiqmark {

// Pooled over all 3*W*H samples with peak 255. Identical images give +inf.
double psnr(const RgbImage& a, const RgbImage& b);

// sum(w * w2) / (sqrt(sum w) * sqrt(sum w2)); 0 when either sum is 0.
double nc(const BitMatrix& w, const BitMatrix& w2);

// Fraction of positions that differ.
double ber(const BitMatrix& w, const BitMatrix& w2);

enum class RgbChannel { R, G, B };

using Histogram = std::array<std::uint64_t, 256>;

Histogram histogram(const RgbImage& img, RgbChannel channel);

}  // namespace yiqmark

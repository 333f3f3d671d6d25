#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>

#include "yiqmark/arnold.hpp"
#include "yiqmark/block_dct.hpp"
#include "yiqmark/color_space.hpp"
#include "yiqmark/haar_dwt.hpp"
#include "yiqmark/image.hpp"
#include "yiqmark/keystream.hpp"

namespace yiqmark {

struct EmbedConfig {
  Channel channel = Channel::Q;
  double k = 4.0;
  KeySchedule keys{};
  MidBandMask mask = MidBandMask::reference();
  std::size_t wm_side = 64;
};

struct EmbedReport {
  double psnr_db = std::numeric_limits<double>::infinity();
  Channel channel = Channel::Q;
  double k = 0.0;
  std::uint64_t scramble_iterations = 0;
  std::size_t blocks_modified = 0;
};

struct EmbedResult {
  RgbImage image;
  EmbedReport report;
};

inline constexpr std::size_t kBlockSide = 4;

// Rejects k <= 0 or non-finite k and invalid key schedules.
void validate(const EmbedConfig& cfg);

// Checks dimensions divisible by 8 and that the HL band holds exactly
// wm_side^2 blocks of 4x4. Blocks pair with bits in row-major order, so the
// block grid itself need not be square.
void check_capacity(std::size_t width, std::size_t height, std::size_t wm_side);

EmbedResult embed(const RgbImage& cover, const BitMatrix& wm, const EmbedConfig& cfg);

// Blind: uses only the image and the configuration.
BitMatrix extract(const RgbImage& img, const EmbedConfig& cfg);

// Bit = 1 iff sample >= threshold.
BitMatrix binarize(const GrayImage& g, std::uint8_t threshold = 128);

// 0 -> 0, 1 -> 255.
GrayImage to_gray(const BitMatrix& m);

// Iteration count both pipelines use for the Arnold layer.
std::uint64_t scramble_iterations_for(const EmbedConfig& cfg);

// Pearson correlation; 0 when either side has zero variance.
double pearson(std::span<const double> a, std::span<const int> b);

namespace detail {

// Adds k * pn_{bit} to the mid-band of every 4x4 HL block, blocks visited
// in row-major order against bits in row-major order. Only hl changes.
SubBands embed_subbands(SubBands bands, const BitMatrix& scrambled, const PnPair& pns,
                        double k, const MidBandMask& mask);

BitMatrix detect_subbands(const SubBands& bands, const PnPair& pns, const MidBandMask& mask,
                          std::size_t wm_side);

// Full pipeline without the k > 0 guard; k = 0 is allowed here.
EmbedResult embed_unchecked(const RgbImage& cover, const BitMatrix& wm, const EmbedConfig& cfg);

}  // namespace detail

}  // namespace yiqmark

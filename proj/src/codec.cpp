#include "yiqmark/codec.hpp"

#include <cmath>
#include <string>

#include "yiqmark/error.hpp"
#include "yiqmark/metrics.hpp"

namespace yiqmark {

namespace {

Block4 read_block(const Plane& p, std::size_t bx, std::size_t by) {
  Block4 b{};
  for (std::size_t r = 0; r < kBlockSide; ++r)
    for (std::size_t c = 0; c < kBlockSide; ++c)
      b[r][c] = p.at(bx * kBlockSide + c, by * kBlockSide + r);
  return b;
}

void write_block(Plane& p, std::size_t bx, std::size_t by, const Block4& b) {
  for (std::size_t r = 0; r < kBlockSide; ++r)
    for (std::size_t c = 0; c < kBlockSide; ++c)
      p.at(bx * kBlockSide + c, by * kBlockSide + r) = b[r][c];
}

void check_hl(const Plane& hl, std::size_t wm_side) {
  const std::size_t blocks = (hl.width() / kBlockSide) * (hl.height() / kBlockSide);
  if (hl.width() % kBlockSide != 0 || hl.height() % kBlockSide != 0 ||
      blocks != wm_side * wm_side) {
    throw Error(ErrorCode::DimensionMismatch,
                "HL band of " + std::to_string(hl.width()) + "x" + std::to_string(hl.height()) +
                    " does not hold exactly " + std::to_string(wm_side * wm_side) +
                    " blocks of 4x4");
  }
}

}  // namespace

void validate(const EmbedConfig& cfg) {
  if (!(cfg.k > 0.0) || !std::isfinite(cfg.k)) {
    throw Error(ErrorCode::InvalidParam, "flexing factor k must be finite and > 0");
  }
  if (cfg.wm_side == 0) throw Error(ErrorCode::InvalidParam, "wm_side must be >= 1");
  validate(cfg.keys);
}

void check_capacity(std::size_t width, std::size_t height, std::size_t wm_side) {
  if (width % 8 != 0 || height % 8 != 0) {
    throw Error(ErrorCode::DimensionMismatch,
                "image dimensions " + std::to_string(width) + "x" + std::to_string(height) +
                    " are not divisible by 8");
  }
  if ((width / 8) * (height / 8) != wm_side * wm_side) {
    throw Error(ErrorCode::DimensionMismatch,
                "a " + std::to_string(width) + "x" + std::to_string(height) + " image has " +
                    std::to_string((width / 8) * (height / 8)) +
                    " embedding blocks, a watermark of side " + std::to_string(wm_side) +
                    " needs " + std::to_string(wm_side * wm_side));
  }
}

double pearson(std::span<const double> a, std::span<const int> b) {
  const std::size_t n = a.size();
  if (n == 0 || b.size() != n) return 0.0;
  double ma = 0.0;
  double mb = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    ma += a[k];
    mb += b[k];
  }
  ma /= static_cast<double>(n);
  mb /= static_cast<double>(n);
  double sab = 0.0;
  double saa = 0.0;
  double sbb = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double da = a[k] - ma;
    const double db = b[k] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

std::uint64_t scramble_iterations_for(const EmbedConfig& cfg) {
  return scramble_iterations(cfg.keys, cfg.wm_side * cfg.wm_side, arnold_period(cfg.wm_side));
}

namespace detail {

SubBands embed_subbands(SubBands bands, const BitMatrix& scrambled, const PnPair& pns,
                        double k, const MidBandMask& mask) {
  check_hl(bands.hl, scrambled.side());
  const std::size_t cols = bands.hl.width() / kBlockSide;
  const std::size_t rows = bands.hl.height() / kBlockSide;
  auto bits = scrambled.bits();
  std::vector<double> d;
  for (std::size_t by = 0; by < rows; ++by) {
    for (std::size_t bx = 0; bx < cols; ++bx) {
      const Block4 coeffs = dct4(read_block(bands.hl, bx, by));
      const ChipSequence& pn = bits[by * cols + bx] == 0 ? pns.pn0 : pns.pn1;
      d = midband_get(coeffs, mask);
      for (std::size_t i = 0; i < d.size(); ++i) d[i] += k * pn[i];
      write_block(bands.hl, bx, by, idct4(midband_set(coeffs, mask, d)));
    }
  }
  return bands;
}

BitMatrix detect_subbands(const SubBands& bands, const PnPair& pns, const MidBandMask& mask,
                          std::size_t wm_side) {
  check_hl(bands.hl, wm_side);
  const std::size_t cols = bands.hl.width() / kBlockSide;
  const std::size_t rows = bands.hl.height() / kBlockSide;
  std::vector<std::uint8_t> bits(rows * cols);
  for (std::size_t by = 0; by < rows; ++by) {
    for (std::size_t bx = 0; bx < cols; ++bx) {
      const std::vector<double> v = midband_get(dct4(read_block(bands.hl, bx, by)), mask);
      const double c0 = pearson(v, pns.pn0);
      const double c1 = pearson(v, pns.pn1);
      bits[by * cols + bx] = c0 > c1 ? 0 : 1;
    }
  }
  return BitMatrix(wm_side, std::move(bits));
}

EmbedResult embed_unchecked(const RgbImage& cover, const BitMatrix& wm, const EmbedConfig& cfg) {
  if (wm.side() != cfg.wm_side) {
    throw Error(ErrorCode::DimensionMismatch, "watermark side " + std::to_string(wm.side()) +
                                                  " differs from configured wm_side " +
                                                  std::to_string(cfg.wm_side));
  }
  check_capacity(cover.width(), cover.height(), cfg.wm_side);

  YiqImage yiq = rgb_to_yiq(cover);
  Plane& carrier = yiq.plane(cfg.channel);
  const SubBands bands = dwt_haar(carrier);

  const std::uint64_t t = scramble_iterations_for(cfg);
  const BitMatrix scrambled = arnold_iterate(wm, t);
  const PnPair pns = pn_pair(cfg.keys.pn_seed, cfg.mask.size());

  carrier = idwt_haar(detail::embed_subbands(bands, scrambled, pns, cfg.k, cfg.mask));

  EmbedResult result{yiq_to_rgb(yiq), {}};
  result.report.psnr_db = psnr(cover, result.image);
  result.report.channel = cfg.channel;
  result.report.k = cfg.k;
  result.report.scramble_iterations = t;
  result.report.blocks_modified = cfg.wm_side * cfg.wm_side;
  return result;
}

}  // namespace detail

EmbedResult embed(const RgbImage& cover, const BitMatrix& wm, const EmbedConfig& cfg) {
  validate(cfg);
  return detail::embed_unchecked(cover, wm, cfg);
}

BitMatrix extract(const RgbImage& img, const EmbedConfig& cfg) {
  validate(cfg.keys);
  if (cfg.wm_side == 0) throw Error(ErrorCode::InvalidParam, "wm_side must be >= 1");
  check_capacity(img.width(), img.height(), cfg.wm_side);

  const YiqImage yiq = rgb_to_yiq(img);
  const SubBands bands = dwt_haar(yiq.plane(cfg.channel));
  const PnPair pns = pn_pair(cfg.keys.pn_seed, cfg.mask.size());
  const BitMatrix intermediate = detail::detect_subbands(bands, pns, cfg.mask, cfg.wm_side);
  return arnold_unscramble(intermediate, scramble_iterations_for(cfg));
}

BitMatrix binarize(const GrayImage& g, std::uint8_t threshold) {
  if (g.width() != g.height()) {
    throw Error(ErrorCode::NonSquare, "watermark image must be square, got " +
                                          std::to_string(g.width()) + "x" +
                                          std::to_string(g.height()));
  }
  std::vector<std::uint8_t> bits(g.samples().size());
  auto s = g.samples();
  for (std::size_t k = 0; k < bits.size(); ++k) bits[k] = s[k] >= threshold ? 1 : 0;
  return BitMatrix(g.width(), std::move(bits));
}

GrayImage to_gray(const BitMatrix& m) {
  std::vector<std::uint8_t> samples(m.size());
  auto b = m.bits();
  for (std::size_t k = 0; k < samples.size(); ++k) samples[k] = b[k] ? 255 : 0;
  return GrayImage(m.side(), m.side(), std::move(samples));
}

}  // namespace yiqmark

#include "yiqmark/yiqmark.h"

#include <cmath>
#include <exception>
#include <limits>
#include <new>
#include <string>

#include "yiqmark/attacks.hpp"
#include "yiqmark/codec.hpp"
#include "yiqmark/error.hpp"
#include "yiqmark/metrics.hpp"
#include "yiqmark/version.hpp"

struct ym_image {
  yiqmark::RgbImage value;
};
struct ym_gray {
  yiqmark::GrayImage value;
};
struct ym_bits {
  yiqmark::BitMatrix value;
};
struct ym_config {
  yiqmark::EmbedConfig value;
};

namespace {

thread_local std::string g_last_error;

ym_status to_status(yiqmark::ErrorCode code) {
  using yiqmark::ErrorCode;
  switch (code) {
    case ErrorCode::MissingFile: return YM_ERR_MISSING_FILE;
    case ErrorCode::UnsupportedFormat: return YM_ERR_UNSUPPORTED_FORMAT;
    case ErrorCode::CorruptData: return YM_ERR_CORRUPT_DATA;
    case ErrorCode::IoFailure: return YM_ERR_IO_FAILURE;
    case ErrorCode::OddDimension: return YM_ERR_ODD_DIMENSION;
    case ErrorCode::DimensionMismatch: return YM_ERR_DIMENSION_MISMATCH;
    case ErrorCode::LengthMismatch: return YM_ERR_LENGTH_MISMATCH;
    case ErrorCode::NonBinaryWatermark: return YM_ERR_NON_BINARY_WATERMARK;
    case ErrorCode::NonSquare: return YM_ERR_NON_SQUARE;
    case ErrorCode::DegenerateSize: return YM_ERR_DEGENERATE_SIZE;
    case ErrorCode::InvalidParam: return YM_ERR_INVALID_PARAM;
  }
  return YM_ERR_INTERNAL;
}

// Runs fn, translating exceptions into status codes and the thread-local message.
template <class Fn>
ym_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    g_last_error.clear();
    return YM_OK;
  } catch (const yiqmark::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return YM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return YM_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return YM_ERR_INTERNAL;
  }
}

ym_status null_argument(const char* name) {
  g_last_error = std::string("null argument: ") + name;
  return YM_ERR_NULL_ARGUMENT;
}

#define YM_REQUIRE(ptr) \
  if ((ptr) == nullptr) return null_argument(#ptr)

yiqmark::ImageFormat to_format(ym_format f) {
  return f == YM_FORMAT_PPM ? yiqmark::ImageFormat::Ppm : yiqmark::ImageFormat::Png;
}

yiqmark::Channel to_channel(ym_channel c) {
  switch (c) {
    case YM_CHANNEL_Y: return yiqmark::Channel::Y;
    case YM_CHANNEL_I: return yiqmark::Channel::I;
    case YM_CHANNEL_Q: return yiqmark::Channel::Q;
  }
  throw yiqmark::Error(yiqmark::ErrorCode::InvalidParam, "unknown channel");
}

ym_channel from_channel(yiqmark::Channel c) {
  switch (c) {
    case yiqmark::Channel::Y: return YM_CHANNEL_Y;
    case yiqmark::Channel::I: return YM_CHANNEL_I;
    case yiqmark::Channel::Q: return YM_CHANNEL_Q;
  }
  return YM_CHANNEL_Q;
}

}  // namespace

extern "C" {

const char* ym_version(void) { return yiqmark::kVersion; }

const char* ym_status_string(ym_status status) {
  switch (status) {
    case YM_OK: return "ok";
    case YM_ERR_NULL_ARGUMENT: return "null argument";
    case YM_ERR_MISSING_FILE: return "missing file";
    case YM_ERR_UNSUPPORTED_FORMAT: return "unsupported format";
    case YM_ERR_CORRUPT_DATA: return "corrupt data";
    case YM_ERR_IO_FAILURE: return "i/o failure";
    case YM_ERR_ODD_DIMENSION: return "odd dimension";
    case YM_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case YM_ERR_LENGTH_MISMATCH: return "length mismatch";
    case YM_ERR_NON_BINARY_WATERMARK: return "non-binary watermark";
    case YM_ERR_NON_SQUARE: return "non-square image";
    case YM_ERR_DEGENERATE_SIZE: return "degenerate size";
    case YM_ERR_INVALID_PARAM: return "invalid parameter";
    case YM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ym_last_error(void) { return g_last_error.c_str(); }

/* images */

ym_status ym_image_create(uint32_t width, uint32_t height, const uint8_t* rgb, ym_image** out) {
  YM_REQUIRE(rgb);
  YM_REQUIRE(out);
  return guarded([&] {
    std::vector<yiqmark::Rgb> px(std::size_t{width} * height);
    for (std::size_t k = 0; k < px.size(); ++k) px[k] = {rgb[3 * k], rgb[3 * k + 1], rgb[3 * k + 2]};
    *out = new ym_image{yiqmark::RgbImage(width, height, std::move(px))};
  });
}

ym_status ym_image_read(const char* path, ym_image** out) {
  YM_REQUIRE(path);
  YM_REQUIRE(out);
  return guarded([&] { *out = new ym_image{yiqmark::read_image(path)}; });
}

ym_status ym_image_write(const ym_image* img, const char* path, ym_format format) {
  YM_REQUIRE(img);
  YM_REQUIRE(path);
  return guarded([&] { yiqmark::write_image(img->value, path, to_format(format)); });
}

void ym_image_free(ym_image* img) { delete img; }

uint32_t ym_image_width(const ym_image* img) {
  return img ? static_cast<uint32_t>(img->value.width()) : 0;
}
uint32_t ym_image_height(const ym_image* img) {
  return img ? static_cast<uint32_t>(img->value.height()) : 0;
}
const uint8_t* ym_image_data(const ym_image* img) {
  return img ? reinterpret_cast<const uint8_t*>(img->value.pixels().data()) : nullptr;
}

ym_status ym_gray_create(uint32_t width, uint32_t height, const uint8_t* samples, ym_gray** out) {
  YM_REQUIRE(samples);
  YM_REQUIRE(out);
  return guarded([&] {
    std::vector<uint8_t> s(samples, samples + std::size_t{width} * height);
    *out = new ym_gray{yiqmark::GrayImage(width, height, std::move(s))};
  });
}

ym_status ym_gray_read(const char* path, ym_gray** out) {
  YM_REQUIRE(path);
  YM_REQUIRE(out);
  return guarded([&] { *out = new ym_gray{yiqmark::read_gray(path)}; });
}

ym_status ym_gray_write(const ym_gray* img, const char* path, ym_format format) {
  YM_REQUIRE(img);
  YM_REQUIRE(path);
  return guarded([&] { yiqmark::write_gray(img->value, path, to_format(format)); });
}

void ym_gray_free(ym_gray* img) { delete img; }

uint32_t ym_gray_width(const ym_gray* img) {
  return img ? static_cast<uint32_t>(img->value.width()) : 0;
}
uint32_t ym_gray_height(const ym_gray* img) {
  return img ? static_cast<uint32_t>(img->value.height()) : 0;
}
const uint8_t* ym_gray_data(const ym_gray* img) {
  return img ? img->value.samples().data() : nullptr;
}

/* bits */

ym_status ym_bits_create(uint32_t side, const uint8_t* bits, ym_bits** out) {
  YM_REQUIRE(bits);
  YM_REQUIRE(out);
  return guarded([&] {
    std::vector<uint8_t> b(bits, bits + std::size_t{side} * side);
    *out = new ym_bits{yiqmark::BitMatrix(side, std::move(b))};
  });
}

ym_status ym_bits_random(uint32_t side, uint64_t seed, ym_bits** out) {
  YM_REQUIRE(out);
  return guarded([&] {
    const yiqmark::ChipSequence chips = yiqmark::pn_bits(seed, std::size_t{side} * side);
    std::vector<uint8_t> b(chips.size());
    for (std::size_t k = 0; k < b.size(); ++k) b[k] = chips[k] > 0 ? 1 : 0;
    *out = new ym_bits{yiqmark::BitMatrix(side, std::move(b))};
  });
}

void ym_bits_free(ym_bits* bits) { delete bits; }

uint32_t ym_bits_side(const ym_bits* bits) {
  return bits ? static_cast<uint32_t>(bits->value.side()) : 0;
}
const uint8_t* ym_bits_data(const ym_bits* bits) {
  return bits ? bits->value.bits().data() : nullptr;
}

ym_status ym_binarize(const ym_gray* img, uint8_t threshold, ym_bits** out) {
  YM_REQUIRE(img);
  YM_REQUIRE(out);
  return guarded([&] { *out = new ym_bits{yiqmark::binarize(img->value, threshold)}; });
}

ym_status ym_bits_to_gray(const ym_bits* bits, ym_gray** out) {
  YM_REQUIRE(bits);
  YM_REQUIRE(out);
  return guarded([&] { *out = new ym_gray{yiqmark::to_gray(bits->value)}; });
}

/* config */

ym_status ym_config_create(ym_config** out) {
  YM_REQUIRE(out);
  return guarded([&] { *out = new ym_config{}; });
}

ym_status ym_config_clone(const ym_config* cfg, ym_config** out) {
  YM_REQUIRE(cfg);
  YM_REQUIRE(out);
  return guarded([&] { *out = new ym_config{cfg->value}; });
}

void ym_config_free(ym_config* cfg) { delete cfg; }

ym_status ym_config_set_channel(ym_config* cfg, ym_channel channel) {
  YM_REQUIRE(cfg);
  return guarded([&] { cfg->value.channel = to_channel(channel); });
}

ym_status ym_config_set_strength(ym_config* cfg, double k) {
  YM_REQUIRE(cfg);
  return guarded([&] {
    if (!(k > 0.0) || !std::isfinite(k)) {
      throw yiqmark::Error(yiqmark::ErrorCode::InvalidParam, "k must be finite and > 0");
    }
    cfg->value.k = k;
  });
}

ym_status ym_config_set_keys(ym_config* cfg, uint64_t k1, uint64_t pn_seed, int64_t threshold,
                             uint64_t count_a, uint64_t count_b) {
  YM_REQUIRE(cfg);
  return guarded([&] {
    const yiqmark::KeySchedule ks{k1, pn_seed, threshold, count_a, count_b};
    yiqmark::validate(ks);
    cfg->value.keys = ks;
  });
}

ym_status ym_config_set_mask(ym_config* cfg, const uint8_t* rows, const uint8_t* cols,
                             size_t length) {
  YM_REQUIRE(cfg);
  YM_REQUIRE(rows);
  YM_REQUIRE(cols);
  return guarded([&] {
    std::vector<yiqmark::CoeffPos> pos(length);
    for (std::size_t k = 0; k < length; ++k) pos[k] = {rows[k], cols[k]};
    cfg->value.mask = yiqmark::MidBandMask(std::move(pos));
  });
}

ym_status ym_config_set_wm_side(ym_config* cfg, uint32_t side) {
  YM_REQUIRE(cfg);
  return guarded([&] {
    if (side == 0) throw yiqmark::Error(yiqmark::ErrorCode::InvalidParam, "wm_side must be >= 1");
    cfg->value.wm_side = side;
  });
}

ym_channel ym_config_channel(const ym_config* cfg) {
  return cfg ? from_channel(cfg->value.channel) : YM_CHANNEL_Q;
}

double ym_config_strength(const ym_config* cfg) { return cfg ? cfg->value.k : 0.0; }

void ym_config_keys(const ym_config* cfg, uint64_t* k1, uint64_t* pn_seed, int64_t* threshold,
                    uint64_t* count_a, uint64_t* count_b) {
  if (!cfg) return;
  const auto& ks = cfg->value.keys;
  if (k1) *k1 = ks.k1;
  if (pn_seed) *pn_seed = ks.pn_seed;
  if (threshold) *threshold = ks.threshold;
  if (count_a) *count_a = ks.count_a;
  if (count_b) *count_b = ks.count_b;
}

uint32_t ym_config_wm_side(const ym_config* cfg) {
  return cfg ? static_cast<uint32_t>(cfg->value.wm_side) : 0;
}

size_t ym_config_mask_length(const ym_config* cfg) { return cfg ? cfg->value.mask.size() : 0; }

void ym_config_mask_position(const ym_config* cfg, size_t index, uint8_t* row, uint8_t* col) {
  if (!cfg || index >= cfg->value.mask.size()) return;
  const auto p = cfg->value.mask.positions()[index];
  if (row) *row = static_cast<uint8_t>(p.row);
  if (col) *col = static_cast<uint8_t>(p.col);
}

/* codec */

ym_status ym_embed(const ym_image* cover, const ym_bits* watermark, const ym_config* cfg,
                   ym_image** out, ym_embed_report* report) {
  YM_REQUIRE(cover);
  YM_REQUIRE(watermark);
  YM_REQUIRE(cfg);
  YM_REQUIRE(out);
  return guarded([&] {
    yiqmark::EmbedResult r = yiqmark::embed(cover->value, watermark->value, cfg->value);
    if (report) {
      report->psnr_db = r.report.psnr_db;
      report->channel = from_channel(r.report.channel);
      report->k = r.report.k;
      report->scramble_iterations = r.report.scramble_iterations;
      report->blocks_modified = r.report.blocks_modified;
    }
    *out = new ym_image{std::move(r.image)};
  });
}

ym_status ym_extract(const ym_image* img, const ym_config* cfg, ym_bits** out) {
  YM_REQUIRE(img);
  YM_REQUIRE(cfg);
  YM_REQUIRE(out);
  return guarded([&] { *out = new ym_bits{yiqmark::extract(img->value, cfg->value)}; });
}

ym_status ym_scramble_iterations(const ym_config* cfg, uint64_t* out) {
  YM_REQUIRE(cfg);
  YM_REQUIRE(out);
  return guarded([&] {
    yiqmark::validate(cfg->value.keys);
    *out = yiqmark::scramble_iterations_for(cfg->value);
  });
}

ym_status ym_arnold_period(uint32_t side, uint64_t* out) {
  YM_REQUIRE(out);
  return guarded([&] { *out = yiqmark::arnold_period(side); });
}

/* metrics */

ym_status ym_psnr(const ym_image* a, const ym_image* b, double* out_db) {
  YM_REQUIRE(a);
  YM_REQUIRE(b);
  YM_REQUIRE(out_db);
  return guarded([&] { *out_db = yiqmark::psnr(a->value, b->value); });
}

ym_status ym_nc(const ym_bits* w, const ym_bits* w2, double* out) {
  YM_REQUIRE(w);
  YM_REQUIRE(w2);
  YM_REQUIRE(out);
  return guarded([&] { *out = yiqmark::nc(w->value, w2->value); });
}

ym_status ym_ber(const ym_bits* w, const ym_bits* w2, double* out) {
  YM_REQUIRE(w);
  YM_REQUIRE(w2);
  YM_REQUIRE(out);
  return guarded([&] { *out = yiqmark::ber(w->value, w2->value); });
}

ym_status ym_histogram(const ym_image* img, ym_rgb_channel channel, uint64_t bins[256]) {
  YM_REQUIRE(img);
  YM_REQUIRE(bins);
  return guarded([&] {
    yiqmark::RgbChannel c = yiqmark::RgbChannel::R;
    switch (channel) {
      case YM_RGB_R: c = yiqmark::RgbChannel::R; break;
      case YM_RGB_G: c = yiqmark::RgbChannel::G; break;
      case YM_RGB_B: c = yiqmark::RgbChannel::B; break;
      default: throw yiqmark::Error(yiqmark::ErrorCode::InvalidParam, "unknown RGB channel");
    }
    const yiqmark::Histogram h = yiqmark::histogram(img->value, c);
    for (std::size_t k = 0; k < h.size(); ++k) bins[k] = h[k];
  });
}

/* attacks */

ym_status ym_attack(const ym_image* img, ym_attack_kind kind, double param, uint64_t seed,
                    ym_image** out) {
  YM_REQUIRE(img);
  YM_REQUIRE(out);
  return guarded([&] {
    yiqmark::AttackSpec spec{yiqmark::AttackKind::Scale, param, seed};
    switch (kind) {
      case YM_ATTACK_SCALE: spec.kind = yiqmark::AttackKind::Scale; break;
      case YM_ATTACK_ROTATE: spec.kind = yiqmark::AttackKind::Rotate; break;
      case YM_ATTACK_JPEG: spec.kind = yiqmark::AttackKind::Jpeg; break;
      case YM_ATTACK_GAUSSIAN_NOISE: spec.kind = yiqmark::AttackKind::GaussianNoise; break;
      case YM_ATTACK_SALT_PEPPER: spec.kind = yiqmark::AttackKind::SaltPepper; break;
      default: throw yiqmark::Error(yiqmark::ErrorCode::InvalidParam, "unknown attack kind");
    }
    *out = new ym_image{yiqmark::apply_attack(img->value, spec)};
  });
}

}  // extern "C"

#include "yiqmark/attacks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "yiqmark/block_dct.hpp"
#include "yiqmark/color_space.hpp"
#include "yiqmark/error.hpp"
#include "yiqmark/keystream.hpp"

namespace yiqmark {

namespace {

constexpr std::array<int, 64> kLuminanceTable = {
    16, 11, 10, 16, 24,  40,  51,  61,  12, 12, 14, 19, 26,  58,  60,  55,
    14, 13, 16, 24, 40,  57,  69,  56,  14, 17, 22, 29, 51,  87,  80,  62,
    18, 22, 37, 56, 68,  109, 103, 77,  24, 35, 55, 64, 81,  104, 113, 92,
    49, 64, 78, 87, 103, 121, 120, 101, 72, 92, 95, 98, 112, 100, 103, 99};

// Real-valued RGB sample grid used between resampling stages.
struct FloatRaster {
  std::size_t width;
  std::size_t height;
  std::vector<std::array<double, 3>> px;
};

RgbImage to_image(const FloatRaster& f) {
  RgbImage out(f.width, f.height);
  auto p = out.pixels();
  for (std::size_t k = 0; k < p.size(); ++k) {
    p[k] = {quantize_sample(f.px[k][0]), quantize_sample(f.px[k][1]), quantize_sample(f.px[k][2])};
  }
  return out;
}

// Bilinear sample with coordinates clamped into the frame.
std::array<double, 3> sample(const RgbImage& img, double x, double y) {
  const double maxx = static_cast<double>(img.width() - 1);
  const double maxy = static_cast<double>(img.height() - 1);
  x = std::clamp(x, 0.0, maxx);
  y = std::clamp(y, 0.0, maxy);
  std::size_t x0 = static_cast<std::size_t>(std::floor(x));
  std::size_t y0 = static_cast<std::size_t>(std::floor(y));
  if (img.width() > 1) x0 = std::min(x0, img.width() - 2);
  if (img.height() > 1) y0 = std::min(y0, img.height() - 2);
  const std::size_t x1 = std::min(x0 + 1, img.width() - 1);
  const std::size_t y1 = std::min(y0 + 1, img.height() - 1);
  const double fx = x - static_cast<double>(x0);
  const double fy = y - static_cast<double>(y0);
  const Rgb& a = img.at(x0, y0);
  const Rgb& b = img.at(x1, y0);
  const Rgb& c = img.at(x0, y1);
  const Rgb& d = img.at(x1, y1);
  auto lerp2 = [&](double va, double vb, double vc, double vd) {
    return (va * (1 - fx) + vb * fx) * (1 - fy) + (vc * (1 - fx) + vd * fx) * fy;
  };
  return {lerp2(a.r, b.r, c.r, d.r), lerp2(a.g, b.g, c.g, d.g), lerp2(a.b, b.b, c.b, d.b)};
}

RgbImage resize_bilinear(const RgbImage& img, std::size_t w, std::size_t h) {
  FloatRaster out{w, h, std::vector<std::array<double, 3>>(w * h)};
  const double sx = static_cast<double>(img.width() - 1) / static_cast<double>(w - 1);
  const double sy = static_cast<double>(img.height() - 1) / static_cast<double>(h - 1);
  for (std::size_t y = 0; y < h; ++y)
    for (std::size_t x = 0; x < w; ++x)
      out.px[y * w + x] = sample(img, static_cast<double>(x) * sx, static_cast<double>(y) * sy);
  return to_image(out);
}

RgbImage rotate_once(const RgbImage& img, double degrees) {
  const double theta = degrees * std::numbers::pi / 180.0;
  const double cs = std::cos(theta);
  const double sn = std::sin(theta);
  const double cx = static_cast<double>(img.width() - 1) / 2.0;
  const double cy = static_cast<double>(img.height() - 1) / 2.0;
  FloatRaster out{img.width(), img.height(),
                  std::vector<std::array<double, 3>>(img.pixel_count())};
  for (std::size_t y = 0; y < img.height(); ++y) {
    for (std::size_t x = 0; x < img.width(); ++x) {
      const double dx = static_cast<double>(x) - cx;
      const double dy = static_cast<double>(y) - cy;
      // Inverse mapping: destination pixel pulls from the source rotated by -theta.
      const double srcx = cs * dx + sn * dy + cx;
      const double srcy = -sn * dx + cs * dy + cy;
      out.px[y * img.width() + x] = sample(img, srcx, srcy);
    }
  }
  return to_image(out);
}

void quantize_plane(Plane& p, const std::array<int, 64>& table) {
  const std::size_t w = p.width();
  const std::size_t h = p.height();
  const std::size_t bw = (w + 7) / 8;
  const std::size_t bh = (h + 7) / 8;
  for (std::size_t by = 0; by < bh; ++by) {
    for (std::size_t bx = 0; bx < bw; ++bx) {
      Block<8> blk{};
      for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c)
          blk[r][c] = p.at(std::min(bx * 8 + c, w - 1), std::min(by * 8 + r, h - 1));
      Block<8> coeffs = dct<8>(blk);
      for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c) {
          const double q = table[r * 8 + c];
          coeffs[r][c] = std::round(coeffs[r][c] / q) * q;
        }
      const Block<8> back = idct<8>(coeffs);
      for (std::size_t r = 0; r < 8 && by * 8 + r < h; ++r)
        for (std::size_t c = 0; c < 8 && bx * 8 + c < w; ++c)
          p.at(bx * 8 + c, by * 8 + r) = back[r][c];
    }
  }
}

}  // namespace

RgbImage attack_scale(const RgbImage& img, double factor) {
  if (!(factor > 0.0 && factor <= 1.0)) {
    throw Error(ErrorCode::InvalidParam, "scale factor must be in (0, 1]");
  }
  const auto w = static_cast<std::size_t>(std::lround(factor * static_cast<double>(img.width())));
  const auto h = static_cast<std::size_t>(std::lround(factor * static_cast<double>(img.height())));
  if (w < 2 || h < 2) {
    throw Error(ErrorCode::DegenerateSize, "scaled image would be smaller than 2x2");
  }
  return resize_bilinear(resize_bilinear(img, w, h), img.width(), img.height());
}

RgbImage attack_rotate(const RgbImage& img, double degrees) {
  if (!std::isfinite(degrees)) throw Error(ErrorCode::InvalidParam, "rotation angle must be finite");
  return rotate_once(rotate_once(img, degrees), -degrees);
}

std::array<int, 64> jpeg_quant_table(int quality) {
  if (quality < 1 || quality > 100) {
    throw Error(ErrorCode::InvalidParam, "JPEG quality must be in [1, 100]");
  }
  const double scale = quality < 50 ? 50.0 / quality : 2.0 - quality / 50.0;
  std::array<int, 64> table{};
  for (std::size_t k = 0; k < 64; ++k) {
    table[k] = std::max(1, static_cast<int>(std::floor(kLuminanceTable[k] * scale + 0.5)));
  }
  return table;
}

RgbImage attack_jpeg(const RgbImage& img, int quality) {
  const auto table = jpeg_quant_table(quality);
  YiqImage yiq = rgb_to_yiq(img);
  quantize_plane(yiq.y, table);
  quantize_plane(yiq.i, table);
  quantize_plane(yiq.q, table);
  return yiq_to_rgb(yiq);
}

RgbImage attack_noise(const RgbImage& img, const AttackSpec& spec) {
  RgbImage out = img;
  PnGenerator gen(spec.rng_seed);
  if (spec.kind == AttackKind::GaussianNoise) {
    if (!(spec.param >= 0.0) || !std::isfinite(spec.param)) {
      throw Error(ErrorCode::InvalidParam, "noise sigma must be finite and >= 0");
    }
    const double sigma = spec.param;
    double spare = 0.0;
    bool have_spare = false;
    auto normal = [&] {
      if (have_spare) {
        have_spare = false;
        return spare;
      }
      const double r = std::sqrt(-2.0 * std::log(gen.next_unit()));
      const double phi = 2.0 * std::numbers::pi * gen.next_unit();
      spare = r * std::sin(phi);
      have_spare = true;
      return r * std::cos(phi);
    };
    for (Rgb& p : out.pixels()) {
      p.r = quantize_sample(p.r + sigma * normal());
      p.g = quantize_sample(p.g + sigma * normal());
      p.b = quantize_sample(p.b + sigma * normal());
    }
    return out;
  }
  if (spec.kind == AttackKind::SaltPepper) {
    if (!(spec.param >= 0.0 && spec.param <= 1.0)) {
      throw Error(ErrorCode::InvalidParam, "salt-and-pepper fraction must be in [0, 1]");
    }
    for (Rgb& p : out.pixels()) {
      if (gen.next_unit() < spec.param) {
        const std::uint8_t v = gen.next_chip() > 0 ? 255 : 0;
        p = {v, v, v};
      }
    }
    return out;
  }
  throw Error(ErrorCode::InvalidParam, "attack_noise needs a noise attack kind");
}

RgbImage apply_attack(const RgbImage& img, const AttackSpec& spec) {
  switch (spec.kind) {
    case AttackKind::Scale: return attack_scale(img, spec.param);
    case AttackKind::Rotate: return attack_rotate(img, spec.param);
    case AttackKind::Jpeg: {
      const double q = spec.param;
      if (!(q >= 1.0 && q <= 100.0) || q != std::floor(q)) {
        throw Error(ErrorCode::InvalidParam, "JPEG quality must be an integer in [1, 100]");
      }
      return attack_jpeg(img, static_cast<int>(q));
    }
    case AttackKind::GaussianNoise:
    case AttackKind::SaltPepper: return attack_noise(img, spec);
  }
  throw Error(ErrorCode::InvalidParam, "unknown attack kind");
}

std::string_view to_string(AttackKind kind) noexcept {
  switch (kind) {
    case AttackKind::Scale: return "scale";
    case AttackKind::Rotate: return "rotate";
    case AttackKind::Jpeg: return "jpeg";
    case AttackKind::GaussianNoise: return "gaussian_noise";
    case AttackKind::SaltPepper: return "salt_pepper";
  }
  return "unknown";
}

std::optional<AttackKind> parse_attack_kind(std::string_view name) noexcept {
  if (name == "scale") return AttackKind::Scale;
  if (name == "rotate") return AttackKind::Rotate;
  if (name == "jpeg") return AttackKind::Jpeg;
  if (name == "gaussian_noise" || name == "gaussian") return AttackKind::GaussianNoise;
  if (name == "salt_pepper") return AttackKind::SaltPepper;
  return std::nullopt;
}

}  // namespace yiqmark

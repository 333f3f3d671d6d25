#include "yiqmark/color_space.hpp"

#include <algorithm>
#include <cmath>

#include "yiqmark/error.hpp"

namespace yiqmark {

std::uint8_t quantize_sample(double v) noexcept {
  const double r = std::round(v);  // std::round is half-away-from-zero
  return static_cast<std::uint8_t>(std::clamp(r, 0.0, 255.0));
}

YiqImage rgb_to_yiq(const RgbImage& img) {
  const std::size_t w = img.width();
  const std::size_t h = img.height();
  YiqImage out{Plane(w, h), Plane(w, h), Plane(w, h)};
  auto px = img.pixels();
  auto y = out.y.values();
  auto i = out.i.values();
  auto q = out.q.values();
  for (std::size_t k = 0; k < px.size(); ++k) {
    const double r = px[k].r;
    const double g = px[k].g;
    const double b = px[k].b;
    y[k] = 0.299 * r + 0.587 * g + 0.114 * b;
    i[k] = 0.596 * r - 0.274 * g - 0.322 * b;
    q[k] = 0.211 * r - 0.522 * g + 0.311 * b;
  }
  return out;
}

RgbImage yiq_to_rgb(const YiqImage& img) {
  if (!img.y.same_shape(img.i) || !img.y.same_shape(img.q)) {
    throw Error(ErrorCode::DimensionMismatch, "YIQ planes differ in size");
  }
  RgbImage out(img.y.width(), img.y.height());
  auto px = out.pixels();
  auto y = img.y.values();
  auto i = img.i.values();
  auto q = img.q.values();
  for (std::size_t k = 0; k < px.size(); ++k) {
    px[k].r = quantize_sample(y[k] + 0.956 * i[k] + 0.621 * q[k]);
    px[k].g = quantize_sample(y[k] - 0.272 * i[k] - 0.647 * q[k]);
    px[k].b = quantize_sample(y[k] - 1.106 * i[k] + 1.702 * q[k]);
  }
  return out;
}

}  // namespace yiqmark

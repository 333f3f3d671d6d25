#include "yiqmark/metrics.hpp"

#include <cmath>
#include <limits>

#include "yiqmark/error.hpp"

namespace yiqmark {

namespace {

void require_same(const BitMatrix& a, const BitMatrix& b) {
  if (a.side() != b.side()) {
    throw Error(ErrorCode::DimensionMismatch, "watermarks differ in size");
  }
}

}  // namespace

double psnr(const RgbImage& a, const RgbImage& b) {
  if (!a.same_shape(b)) throw Error(ErrorCode::DimensionMismatch, "images differ in size");
  auto pa = a.pixels();
  auto pb = b.pixels();
  std::uint64_t sse = 0;
  for (std::size_t k = 0; k < pa.size(); ++k) {
    const int dr = pa[k].r - pb[k].r;
    const int dg = pa[k].g - pb[k].g;
    const int db = pa[k].b - pb[k].b;
    sse += static_cast<std::uint64_t>(dr * dr + dg * dg + db * db);
  }
  if (sse == 0) return std::numeric_limits<double>::infinity();
  const double mse = static_cast<double>(sse) / (3.0 * static_cast<double>(pa.size()));
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double nc(const BitMatrix& w, const BitMatrix& w2) {
  require_same(w, w2);
  auto a = w.bits();
  auto b = w2.bits();
  std::uint64_t cross = 0;
  for (std::size_t k = 0; k < a.size(); ++k) cross += a[k] & b[k];
  // sqrt(a) * sqrt(b) taken as one root so that nc(w, w) is exactly 1.
  const std::uint64_t pa = w.popcount(), pb = w2.popcount();
  if (pa == 0 || pb == 0) return 0.0;
  const double denom = std::sqrt(static_cast<double>(pa) * static_cast<double>(pb));
  return static_cast<double>(cross) / denom;
}

double ber(const BitMatrix& w, const BitMatrix& w2) {
  require_same(w, w2);
  auto a = w.bits();
  auto b = w2.bits();
  std::size_t diff = 0;
  for (std::size_t k = 0; k < a.size(); ++k) diff += a[k] != b[k];
  return static_cast<double>(diff) / static_cast<double>(a.size());
}

Histogram histogram(const RgbImage& img, RgbChannel channel) {
  Histogram h{};
  for (const Rgb& p : img.pixels()) {
    const std::uint8_t v = channel == RgbChannel::R ? p.r : channel == RgbChannel::G ? p.g : p.b;
    ++h[v];
  }
  return h;
}

}  // namespace yiqmark

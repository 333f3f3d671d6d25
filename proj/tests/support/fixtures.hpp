#pragma once

// Deterministic synthetic inputs shared by the unit and acceptance suites.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "yiqmark/arnold.hpp"
#include "yiqmark/color_space.hpp"
#include "yiqmark/error.hpp"
#include "yiqmark/image.hpp"
#include "yiqmark/keystream.hpp"

namespace yiqmark::testing {

// Error code thrown by fn, or nullopt when it returns normally.
template <class F>
std::optional<ErrorCode> code_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline BitMatrix random_bits(std::size_t n, std::uint64_t seed) {
  PnGenerator gen(seed);
  std::vector<std::uint8_t> bits(n * n);
  for (auto& b : bits) b = gen.next_chip() > 0 ? 1 : 0;
  return BitMatrix(n, std::move(bits));
}

inline RgbImage random_image(std::size_t w, std::size_t h, std::uint64_t seed) {
  PnGenerator gen(seed);
  RgbImage img(w, h);
  for (Rgb& p : img.pixels()) {
    const std::uint64_t v = gen.next();
    p = {static_cast<std::uint8_t>(v >> 56), static_cast<std::uint8_t>(v >> 48),
         static_cast<std::uint8_t>(v >> 40)};
  }
  return img;
}

inline Plane random_plane(std::size_t w, std::size_t h, std::uint64_t seed, double lo, double hi) {
  PnGenerator gen(seed);
  Plane p(w, h);
  for (double& v : p.values()) v = lo + (hi - lo) * gen.next_unit();
  return p;
}

// Smooth lattice noise in [0, 1] with the given cell size.
class ValueNoise {
 public:
  ValueNoise(std::size_t cells, std::uint64_t seed) : cells_(cells + 2), lattice_(cells_ * cells_) {
    PnGenerator gen(seed);
    for (double& v : lattice_) v = gen.next_unit();
  }

  double at(double u, double v) const {  // u, v in [0, 1]
    const double x = u * static_cast<double>(cells_ - 2);
    const double y = v * static_cast<double>(cells_ - 2);
    const auto x0 = static_cast<std::size_t>(x);
    const auto y0 = static_cast<std::size_t>(y);
    const double fx = smooth(x - static_cast<double>(x0));
    const double fy = smooth(y - static_cast<double>(y0));
    auto l = [&](std::size_t xi, std::size_t yi) { return lattice_[yi * cells_ + xi]; };
    const double top = l(x0, y0) * (1 - fx) + l(x0 + 1, y0) * fx;
    const double bot = l(x0, y0 + 1) * (1 - fx) + l(x0 + 1, y0 + 1) * fx;
    return top * (1 - fy) + bot * fy;
  }

 private:
  static double smooth(double t) { return t * t * (3 - 2 * t); }
  std::size_t cells_;
  std::vector<double> lattice_;
};

struct NamedCover {
  std::string name;
  RgbImage image;
};

inline std::uint8_t clamp8(double v) { return quantize_sample(v); }

// Five 512x512 covers with clearly different RGB histograms: a linear
// ramp, a dark low-key noise field, a bright high-key plasma, a bimodal
// tiled pattern, and a mid-tone radial scene.
inline std::vector<NamedCover> acceptance_covers(std::size_t side = 512) {
  std::vector<NamedCover> covers;
  const double s = static_cast<double>(side);

  RgbImage ramp(side, side);
  for (std::size_t y = 0; y < side; ++y)
    for (std::size_t x = 0; x < side; ++x)
      ramp.at(x, y) = {clamp8(255.0 * x / s), clamp8(255.0 * y / s),
                       clamp8(127.5 * (x + y) / s)};
  covers.push_back({"ramp", std::move(ramp)});

  RgbImage low(side, side);
  const ValueNoise nr(8, 11), ng(8, 12), nb(8, 13);
  for (std::size_t y = 0; y < side; ++y)
    for (std::size_t x = 0; x < side; ++x) {
      const double u = x / s, v = y / s;
      low.at(x, y) = {clamp8(20 + 90 * nr.at(u, v)), clamp8(10 + 70 * ng.at(u, v)),
                      clamp8(30 + 100 * nb.at(u, v))};
    }
  covers.push_back({"lowkey", std::move(low)});

  RgbImage plasma(side, side);
  for (std::size_t y = 0; y < side; ++y)
    for (std::size_t x = 0; x < side; ++x) {
      const double fx = static_cast<double>(x), fy = static_cast<double>(y);
      plasma.at(x, y) = {clamp8(200 + 50 * std::sin(fx / 23.0)),
                         clamp8(180 + 60 * std::cos(fy / 17.0)),
                         clamp8(170 + 70 * std::sin((fx + fy) / 31.0))};
    }
  covers.push_back({"plasma", std::move(plasma)});

  RgbImage tiles(side, side);
  for (std::size_t y = 0; y < side; ++y)
    for (std::size_t x = 0; x < side; ++x) {
      const bool on = ((x / 64) + (y / 64)) % 2 == 0;
      tiles.at(x, y) = on ? Rgb{220, 40, 60} : Rgb{30, 150, 210};
    }
  covers.push_back({"tiles", std::move(tiles)});

  RgbImage radial(side, side);
  const ValueNoise nt(6, 21);
  for (std::size_t y = 0; y < side; ++y)
    for (std::size_t x = 0; x < side; ++x) {
      const double dx = (x - s / 2) / s, dy = (y - s / 2) / s;
      const double r = std::exp(-(dx * dx + dy * dy) * 6.0);
      const double t = nt.at(x / s, y / s);
      radial.at(x, y) = {clamp8(60 + 150 * r), clamp8(90 + 80 * t), clamp8(140 - 60 * r + 40 * t)};
    }
  covers.push_back({"radial", std::move(radial)});

  return covers;
}

}  // namespace yiqmark::testing

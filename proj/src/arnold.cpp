#include "yiqmark/arnold.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "yiqmark/error.hpp"

namespace yiqmark {

namespace {

using Mat2 = std::array<std::uint64_t, 4>;  // {a, b, c, d} = [[a, b], [c, d]]

Mat2 mul_mod(const Mat2& l, const Mat2& r, std::uint64_t n) {
  return {(l[0] * r[0] + l[1] * r[2]) % n, (l[0] * r[1] + l[1] * r[3]) % n,
          (l[2] * r[0] + l[3] * r[2]) % n, (l[2] * r[1] + l[3] * r[3]) % n};
}

Mat2 pow_mod(Mat2 base, std::uint64_t e, std::uint64_t n) {
  Mat2 acc{1 % n, 0, 0, 1 % n};
  while (e > 0) {
    if (e & 1) acc = mul_mod(acc, base, n);
    base = mul_mod(base, base, n);
    e >>= 1;
  }
  return acc;
}

constexpr Mat2 kCat{1, 1, 1, 2};

BitMatrix apply_linear(const BitMatrix& m, const Mat2& t) {
  const std::size_t n = m.side();
  BitMatrix out(n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t xn = (t[0] * x + t[1] * y) % n;
      const std::size_t yn = (t[2] * x + t[3] * y) % n;
      out.at(xn, yn) = m.at(x, y);
    }
  }
  return out;
}

}  // namespace

BitMatrix::BitMatrix(std::size_t n, std::uint8_t fill) : n_(n), bits_(n * n, fill) {
  if (n == 0) throw Error(ErrorCode::InvalidParam, "bit matrix side must be >= 1");
  if (fill > 1) throw Error(ErrorCode::NonBinaryWatermark, "bit matrix entries must be 0 or 1");
}

BitMatrix::BitMatrix(std::size_t n, std::vector<std::uint8_t> bits)
    : n_(n), bits_(std::move(bits)) {
  if (n == 0) throw Error(ErrorCode::InvalidParam, "bit matrix side must be >= 1");
  if (bits_.size() != n * n) {
    throw Error(ErrorCode::DimensionMismatch, "bit count does not match side * side");
  }
  if (std::any_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b > 1; })) {
    throw Error(ErrorCode::NonBinaryWatermark, "bit matrix entries must be 0 or 1");
  }
}

std::size_t BitMatrix::popcount() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

BitMatrix arnold_step(const BitMatrix& m) { return apply_linear(m, kCat); }

std::uint64_t arnold_period(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidParam, "side length must be >= 1");
  if (n == 1) return 1;
  const Mat2 identity{1, 0, 0, 1};
  Mat2 acc = kCat;
  // The order is bounded by 3n for every n.
  for (std::uint64_t t = 1; t <= 3 * static_cast<std::uint64_t>(n); ++t) {
    if (acc == identity) return t;
    acc = mul_mod(acc, kCat, n);
  }
  throw Error(ErrorCode::InvalidParam, "Arnold period search did not terminate");
}

std::uint64_t arnold_point_period(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidParam, "side length must be >= 1");
  const std::uint64_t start_x = 1 % n;
  const std::uint64_t start_y = 1 % n;
  std::uint64_t x = start_x;
  std::uint64_t y = start_y;
  for (std::uint64_t t = 1;; ++t) {
    const std::uint64_t xn = (x + y) % n;
    const std::uint64_t yn = (x + 2 * y) % n;
    x = xn;
    y = yn;
    if (x == start_x && y == start_y) return t;
  }
}

BitMatrix arnold_iterate(const BitMatrix& m, std::uint64_t t) {
  const std::size_t n = m.side();
  return apply_linear(m, pow_mod(kCat, t % arnold_period(n), n));
}

BitMatrix arnold_unscramble(const BitMatrix& m, std::uint64_t t) {
  const std::uint64_t period = arnold_period(m.side());
  return arnold_iterate(m, period - (t % period));
}

}  // namespace yiqmark

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace yiqmark {

// Square block indexed [row][col].
template <std::size_t N>
using Block = std::array<std::array<double, N>, N>;

using Block4 = Block<4>;

namespace detail {

// basis[p][m] = alpha_p * cos(pi * (2m + 1) * p / 2N)
template <std::size_t N>
const Block<N>& dct_basis() {
  static const Block<N> basis = [] {
    Block<N> c{};
    for (std::size_t p = 0; p < N; ++p) {
      const double alpha = p == 0 ? std::sqrt(1.0 / N) : std::sqrt(2.0 / N);
      for (std::size_t m = 0; m < N; ++m) {
        c[p][m] = alpha * std::cos(std::numbers::pi * static_cast<double>((2 * m + 1) * p) /
                                   static_cast<double>(2 * N));
      }
    }
    return c;
  }();
  return basis;
}

}  // namespace detail

// Orthonormal 2-D DCT-II, evaluated separably: out = C * b * C^T.
template <std::size_t N>
Block<N> dct(const Block<N>& b) {
  const auto& c = detail::dct_basis<N>();
  Block<N> tmp{};
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t n = 0; n < N; ++n) {
      double acc = 0.0;
      for (std::size_t m = 0; m < N; ++m) acc += c[p][m] * b[m][n];
      tmp[p][n] = acc;
    }
  Block<N> out{};
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = 0; q < N; ++q) {
      double acc = 0.0;
      for (std::size_t n = 0; n < N; ++n) acc += tmp[p][n] * c[q][n];
      out[p][q] = acc;
    }
  return out;
}

// Inverse: b = C^T * coeffs * C.
template <std::size_t N>
Block<N> idct(const Block<N>& coeffs) {
  const auto& c = detail::dct_basis<N>();
  Block<N> tmp{};
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t q = 0; q < N; ++q) {
      double acc = 0.0;
      for (std::size_t p = 0; p < N; ++p) acc += c[p][m] * coeffs[p][q];
      tmp[m][q] = acc;
    }
  Block<N> out{};
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t n = 0; n < N; ++n) {
      double acc = 0.0;
      for (std::size_t q = 0; q < N; ++q) acc += tmp[m][q] * c[q][n];
      out[m][n] = acc;
    }
  return out;
}

inline Block4 dct4(const Block4& b) { return dct<4>(b); }
inline Block4 idct4(const Block4& c) { return idct<4>(c); }

struct CoeffPos {
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const CoeffPos&, const CoeffPos&) = default;
};

// Ordered set of distinct non-DC coefficient positions inside a 4x4 block.
// Length is at least 4.
class MidBandMask {
 public:
  explicit MidBandMask(std::vector<CoeffPos> positions);

  // The seven positions with row + col in {2, 3}:
  // (0,2) (1,1) (2,0) (0,3) (1,2) (2,1) (3,0).
  static MidBandMask reference();

  std::size_t size() const noexcept { return positions_.size(); }
  std::span<const CoeffPos> positions() const noexcept { return positions_; }

  friend bool operator==(const MidBandMask&, const MidBandMask&) = default;

 private:
  std::vector<CoeffPos> positions_;
};

std::vector<double> midband_get(const Block4& c, const MidBandMask& mask);
Block4 midband_set(Block4 c, const MidBandMask& mask, std::span<const double> values);

}  // namespace yiqmark

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace yiqmark {

// Square binary matrix, row-major. at(x, y) addresses column x, row y.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n, std::uint8_t fill = 0);
  // Throws NonBinaryWatermark if any entry is not 0 or 1.
  BitMatrix(std::size_t n, std::vector<std::uint8_t> bits);

  std::size_t side() const noexcept { return n_; }
  std::size_t size() const noexcept { return bits_.size(); }

  std::uint8_t& at(std::size_t x, std::size_t y) { return bits_[y * n_ + x]; }
  std::uint8_t at(std::size_t x, std::size_t y) const { return bits_[y * n_ + x]; }

  std::span<const std::uint8_t> bits() const noexcept { return bits_; }
  std::size_t popcount() const noexcept;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

// One application of (x, y) -> (x + y, x + 2y) mod n.
BitMatrix arnold_step(const BitMatrix& m);

// Order of [[1,1],[1,2]] in GL2(Z/n). Iterating this many times is the
// identity for every pixel.
std::uint64_t arnold_period(std::size_t n);

// Orbit length of the single point (1, 1). Always divides arnold_period(n);
// diagnostic only, not safe for descrambling.
std::uint64_t arnold_point_period(std::size_t n);

BitMatrix arnold_iterate(const BitMatrix& m, std::uint64_t t);

// Inverse of arnold_iterate(., t): applies period - (t mod period) steps.
BitMatrix arnold_unscramble(const BitMatrix& m, std::uint64_t t);

}  // namespace yiqmark

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace yiqmark {

inline constexpr std::size_t kMaxImageDimension = 16384;

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

// 8-bit three-channel raster, row-major. Both sides must be >= 2.
class RgbImage {
 public:
  RgbImage() = default;
  RgbImage(std::size_t width, std::size_t height, Rgb fill = {});
  RgbImage(std::size_t width, std::size_t height, std::vector<Rgb> pixels);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t pixel_count() const noexcept { return pixels_.size(); }

  Rgb& at(std::size_t x, std::size_t y) { return pixels_[y * width_ + x]; }
  const Rgb& at(std::size_t x, std::size_t y) const { return pixels_[y * width_ + x]; }

  std::span<Rgb> pixels() noexcept { return pixels_; }
  std::span<const Rgb> pixels() const noexcept { return pixels_; }

  bool same_shape(const RgbImage& o) const noexcept {
    return width_ == o.width_ && height_ == o.height_;
  }

  friend bool operator==(const RgbImage&, const RgbImage&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<Rgb> pixels_;
};

class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(std::size_t width, std::size_t height, std::uint8_t fill = 0);
  GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> samples);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }

  std::uint8_t& at(std::size_t x, std::size_t y) { return samples_[y * width_ + x]; }
  std::uint8_t at(std::size_t x, std::size_t y) const { return samples_[y * width_ + x]; }

  std::span<std::uint8_t> samples() noexcept { return samples_; }
  std::span<const std::uint8_t> samples() const noexcept { return samples_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<std::uint8_t> samples_;
};

enum class ImageFormat { Png, Ppm };

// Format is sniffed from the magic bytes, never from the extension.
RgbImage read_image(const std::filesystem::path& path);
void write_image(const RgbImage& img, const std::filesystem::path& path, ImageFormat format);

// Accepts gray PNG, P5, and RGB inputs; RGB is reduced with the luma weights
// unless all three channels already agree.
GrayImage read_gray(const std::filesystem::path& path);
// Ppm here means binary PGM (P5).
void write_gray(const GrayImage& img, const std::filesystem::path& path, ImageFormat format);

// Picks Ppm for .ppm/.pgm/.pnm extensions, Png otherwise.
ImageFormat format_for_path(const std::filesystem::path& path);

}  // namespace yiqmark

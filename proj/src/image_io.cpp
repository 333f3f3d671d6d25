#include "yiqmark/image.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>
#include <utility>

#include "yiqmark/error.hpp"

namespace yiqmark {

namespace {

void check_dimensions(std::size_t width, std::size_t height) {
  if (width == 0 || height == 0) {
    throw Error(ErrorCode::CorruptData, "image has a zero dimension");
  }
  if (width > kMaxImageDimension || height > kMaxImageDimension) {
    throw Error(ErrorCode::UnsupportedFormat,
                "image dimension exceeds " + std::to_string(kMaxImageDimension));
  }
}

std::vector<unsigned char> slurp(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw Error(ErrorCode::MissingFile, "no such file: " + path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::MissingFile, "cannot open: " + path.string());
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool is_png(const std::vector<unsigned char>& bytes) {
  return bytes.size() >= 8 && png_sig_cmp(bytes.data(), 0, 8) == 0;
}

// Decoded raster before it is narrowed to an RGB or gray image.
struct Raster {
  std::size_t width = 0;
  std::size_t height = 0;
  int channels = 0;  // 1 or 3
  std::vector<std::uint8_t> data;
};

Raster decode_netpbm(const std::vector<unsigned char>& bytes) {
  std::size_t pos = 2;
  auto next_token = [&]() -> unsigned long {
    while (pos < bytes.size()) {
      if (bytes[pos] == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else if (std::isspace(bytes[pos])) {
        ++pos;
      } else {
        break;
      }
    }
    if (pos >= bytes.size() || !std::isdigit(bytes[pos])) {
      throw Error(ErrorCode::CorruptData, "malformed netpbm header");
    }
    unsigned long value = 0;
    while (pos < bytes.size() && std::isdigit(bytes[pos])) {
      value = value * 10 + (bytes[pos] - '0');
      if (value > 1'000'000'000UL) {
        throw Error(ErrorCode::CorruptData, "netpbm header value out of range");
      }
      ++pos;
    }
    return value;
  };

  Raster r;
  r.channels = bytes[1] == '6' ? 3 : 1;
  r.width = next_token();
  r.height = next_token();
  const unsigned long maxval = next_token();
  if (pos >= bytes.size() || !std::isspace(bytes[pos])) {
    throw Error(ErrorCode::CorruptData, "missing separator after netpbm header");
  }
  ++pos;
  check_dimensions(r.width, r.height);
  if (maxval != 255) {
    throw Error(ErrorCode::UnsupportedFormat,
                "only maxval 255 is supported, got " + std::to_string(maxval));
  }
  const std::size_t payload = r.width * r.height * static_cast<std::size_t>(r.channels);
  if (bytes.size() - pos < payload) {
    throw Error(ErrorCode::CorruptData, "netpbm payload shorter than header declares");
  }
  r.data.assign(bytes.begin() + static_cast<std::ptrdiff_t>(pos),
                bytes.begin() + static_cast<std::ptrdiff_t>(pos + payload));
  return r;
}

// Releases png_image resources on every exit path.
struct PngImageGuard {
  png_image image{};
  PngImageGuard() { image.version = PNG_IMAGE_VERSION; }
  ~PngImageGuard() { png_image_free(&image); }
  PngImageGuard(const PngImageGuard&) = delete;
  PngImageGuard& operator=(const PngImageGuard&) = delete;
};

Raster decode_png(const std::vector<unsigned char>& bytes) {
  PngImageGuard guard;
  png_image& img = guard.image;
  if (!png_image_begin_read_from_memory(&img, bytes.data(), bytes.size())) {
    throw Error(ErrorCode::CorruptData, std::string("png: ") + img.message);
  }
  check_dimensions(img.width, img.height);
  if (img.format & PNG_FORMAT_FLAG_LINEAR) {
    throw Error(ErrorCode::UnsupportedFormat, "16-bit PNG is not supported");
  }
  const bool color = (img.format & PNG_FORMAT_FLAG_COLOR) != 0;
  const bool alpha = (img.format & PNG_FORMAT_FLAG_ALPHA) != 0;
  const int channels = color ? 3 : 1;
  const int stored = channels + (alpha ? 1 : 0);

  if (color) {
    img.format = alpha ? PNG_FORMAT_RGBA : PNG_FORMAT_RGB;
  } else {
    img.format = alpha ? PNG_FORMAT_GA : PNG_FORMAT_GRAY;
  }
  std::vector<std::uint8_t> buf(PNG_IMAGE_SIZE(img));
  if (!png_image_finish_read(&img, nullptr, buf.data(), 0, nullptr)) {
    throw Error(ErrorCode::CorruptData, std::string("png: ") + img.message);
  }

  Raster r;
  r.width = img.width;
  r.height = img.height;
  r.channels = channels;
  if (!alpha) {
    r.data = std::move(buf);
    return r;
  }
  r.data.reserve(r.width * r.height * static_cast<std::size_t>(channels));
  for (std::size_t i = 0; i < buf.size(); i += static_cast<std::size_t>(stored)) {
    if (buf[i + static_cast<std::size_t>(channels)] != 255) {
      throw Error(ErrorCode::UnsupportedFormat, "PNG with non-opaque alpha is not supported");
    }
    r.data.insert(r.data.end(), buf.begin() + static_cast<std::ptrdiff_t>(i),
                  buf.begin() + static_cast<std::ptrdiff_t>(i) + channels);
  }
  return r;
}

Raster decode(const std::filesystem::path& path) {
  const auto bytes = slurp(path);
  if (is_png(bytes)) return decode_png(bytes);
  if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '5' || bytes[1] == '6')) {
    return decode_netpbm(bytes);
  }
  if (bytes.size() < 8) {
    throw Error(ErrorCode::CorruptData, "file too short to be an image: " + path.string());
  }
  throw Error(ErrorCode::UnsupportedFormat, "not a PNG or binary netpbm file: " + path.string());
}

void write_bytes(const std::filesystem::path& path, const std::string& header,
                 const std::uint8_t* data, std::size_t size) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot open for writing: " + path.string());
  out.write(header.data(), static_cast<std::streamsize>(header.size()));
  out.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(size));
  out.flush();
  if (!out) throw Error(ErrorCode::IoFailure, "write failed: " + path.string());
}

void write_png(const std::filesystem::path& path, std::size_t width, std::size_t height,
               png_uint_32 format, const std::uint8_t* data) {
  PngImageGuard guard;
  png_image& img = guard.image;
  img.width = static_cast<png_uint_32>(width);
  img.height = static_cast<png_uint_32>(height);
  img.format = format;
  if (!png_image_write_to_file(&img, path.c_str(), 0, data, 0, nullptr)) {
    throw Error(ErrorCode::IoFailure, "png write failed for " + path.string() + ": " + img.message);
  }
}

std::uint8_t luma(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  if (r == g && g == b) return r;
  const double y = 0.299 * r + 0.587 * g + 0.114 * b;
  return static_cast<std::uint8_t>(std::clamp(std::lround(y), 0L, 255L));
}

}  // namespace

RgbImage::RgbImage(std::size_t width, std::size_t height, Rgb fill)
    : width_(width), height_(height), pixels_(width * height, fill) {
  check_dimensions(width, height);
}

RgbImage::RgbImage(std::size_t width, std::size_t height, std::vector<Rgb> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  check_dimensions(width, height);
  if (pixels_.size() != width * height) {
    throw Error(ErrorCode::DimensionMismatch, "pixel count does not match width x height");
  }
}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::uint8_t fill)
    : width_(width), height_(height), samples_(width * height, fill) {
  check_dimensions(width, height);
}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
  check_dimensions(width, height);
  if (samples_.size() != width * height) {
    throw Error(ErrorCode::DimensionMismatch, "sample count does not match width x height");
  }
}

RgbImage read_image(const std::filesystem::path& path) {
  Raster r = decode(path);
  if (r.channels != 3) {
    throw Error(ErrorCode::UnsupportedFormat, "expected a color image: " + path.string());
  }
  std::vector<Rgb> px(r.width * r.height);
  for (std::size_t i = 0; i < px.size(); ++i) {
    px[i] = {r.data[3 * i], r.data[3 * i + 1], r.data[3 * i + 2]};
  }
  return RgbImage(r.width, r.height, std::move(px));
}

GrayImage read_gray(const std::filesystem::path& path) {
  Raster r = decode(path);
  if (r.channels == 1) return GrayImage(r.width, r.height, std::move(r.data));
  std::vector<std::uint8_t> out(r.width * r.height);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = luma(r.data[3 * i], r.data[3 * i + 1], r.data[3 * i + 2]);
  }
  return GrayImage(r.width, r.height, std::move(out));
}

void write_image(const RgbImage& img, const std::filesystem::path& path, ImageFormat format) {
  static_assert(sizeof(Rgb) == 3);
  const auto* data = reinterpret_cast<const std::uint8_t*>(img.pixels().data());
  if (format == ImageFormat::Png) {
    write_png(path, img.width(), img.height(), PNG_FORMAT_RGB, data);
    return;
  }
  const std::string header =
      "P6\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
  write_bytes(path, header, data, img.pixel_count() * 3);
}

void write_gray(const GrayImage& img, const std::filesystem::path& path, ImageFormat format) {
  if (format == ImageFormat::Png) {
    write_png(path, img.width(), img.height(), PNG_FORMAT_GRAY, img.samples().data());
    return;
  }
  const std::string header =
      "P5\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
  write_bytes(path, header, img.samples().data(), img.samples().size());
}

ImageFormat format_for_path(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == ".ppm" || ext == ".pgm" || ext == ".pnm") return ImageFormat::Ppm;
  return ImageFormat::Png;
}

}  // namespace yiqmark

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace lowpoly {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend constexpr bool operator==(Rgb, Rgb) = default;
};

/// Pixel address: x is the column (grows rightward), y the row (grows
/// downward). Ordering is row-major, i.e. by (y, x).
struct PixelCoord {
  int x = 0;
  int y = 0;

  friend constexpr bool operator==(PixelCoord, PixelCoord) = default;
  friend constexpr std::strong_ordering operator<=>(PixelCoord a, PixelCoord b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

/// Translation from a derived grid back to original-image coordinates.
struct Offset {
  int dx = 0;
  int dy = 0;
  friend constexpr bool operator==(Offset, Offset) = default;
};

/// Row-major RGB image.
class RasterImage {
 public:
  RasterImage() = default;
  RasterImage(int width, int height, Rgb fill = {});
  RasterImage(int width, int height, std::vector<Rgb> pixels);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  bool empty() const noexcept { return pixels_.empty(); }
  bool contains(PixelCoord p) const noexcept {
    return p.x >= 0 && p.y >= 0 && p.x < width_ && p.y < height_;
  }

  Rgb at(int x, int y) const { return pixels_[index(x, y)]; }
  Rgb& at(int x, int y) { return pixels_[index(x, y)]; }
  Rgb at(PixelCoord p) const { return at(p.x, p.y); }

  std::span<const Rgb> pixels() const noexcept { return pixels_; }
  std::span<Rgb> pixels() noexcept { return pixels_; }
  std::span<const Rgb> row(int y) const {
    return std::span<const Rgb>(pixels_).subspan(index(0, y), static_cast<std::size_t>(width_));
  }

  friend bool operator==(const RasterImage&, const RasterImage&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<Rgb> pixels_;
};

/// Single-channel 8-bit image. `origin` maps (0, 0) of this grid to the
/// original image it was derived from; each 3x3 pass adds (1, 1).
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(int width, int height, std::uint8_t fill = 0, Offset origin = {});
  GrayImage(int width, int height, std::vector<std::uint8_t> values, Offset origin = {});

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  Offset origin() const noexcept { return origin_; }
  void set_origin(Offset o) noexcept { origin_ = o; }

  std::uint8_t at(int x, int y) const { return values_[index(x, y)]; }
  std::uint8_t& at(int x, int y) { return values_[index(x, y)]; }

  std::span<const std::uint8_t> values() const noexcept { return values_; }
  std::span<std::uint8_t> values() noexcept { return values_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> values_;
  Offset origin_;
};

/// Luma with weights 0.299/0.587/0.114, rounded to nearest, ties away from
/// zero. Evaluated in exact integer arithmetic: (299R + 587G + 114B + 500) / 1000.
std::uint8_t luma(Rgb c) noexcept;

/// Per-pixel luma. Row-parallel over `threads` workers (0 = hardware
/// concurrency); the result does not depend on the thread count.
GrayImage to_grayscale(const RasterImage& img, unsigned threads = 0);

/// Expands a gray grid to an RGB image with equal channels, for stage dumps.
RasterImage gray_to_rgb(const GrayImage& gray);

/// Smallest image the full pipeline accepts: two 3x3 passes must leave at
/// least one pixel.
inline constexpr int kMinPipelineSide = 5;

/// Throws Error{Degenerate} if `img` is smaller than 5x5.
void require_pipeline_size(const RasterImage& img);

}  // namespace lowpoly

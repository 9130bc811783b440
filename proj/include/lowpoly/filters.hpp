#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lowpoly/raster.hpp"

namespace lowpoly {

/// 3x3 integer kernel, row-major as written: weight(row, col) multiplies the
/// neighbor at (x - 1 + col, y - 1 + row). Kernels are not flipped.
struct Kernel3x3 {
  std::array<int, 9> weights{};

  constexpr int operator()(int row, int col) const { return weights[static_cast<std::size_t>(row * 3 + col)]; }
  constexpr Kernel3x3 transposed() const {
    Kernel3x3 t;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) t.weights[static_cast<std::size_t>(c * 3 + r)] = (*this)(r, c);
    return t;
  }
  friend constexpr bool operator==(const Kernel3x3&, const Kernel3x3&) = default;
};

inline constexpr Kernel3x3 kSharpenKernel{{0, -1, 0, -1, 5, -1, 0, -1, 0}};
inline constexpr Kernel3x3 kSobelX{{1, 0, -1, 2, 0, -2, 1, 0, -1}};
inline constexpr Kernel3x3 kSobelY{{1, 2, 1, 0, 0, 0, -1, -2, -1}};
inline constexpr Kernel3x3 kIdentityKernel{{0, 0, 0, 0, 1, 0, 0, 0, 0}};

/// Unclamped convolution result.
struct SignedGrid {
  int width = 0;
  int height = 0;
  std::vector<std::int32_t> values;
  Offset origin;

  std::int32_t at(int x, int y) const {
    return values[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)];
  }
};

/// Sobel magnitudes. Coordinate (x, y) here is (x + offset.dx, y + offset.dy)
/// in the original image.
struct EdgeMap {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> magnitudes;
  Offset offset;

  std::uint8_t at(int x, int y) const {
    return magnitudes[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)];
  }
};

/// Edge pixels S in original-image coordinates, in row-major order.
struct ThresholdedPixels {
  std::vector<PixelCoord> coords;
  int threshold_used = 0;
};

inline constexpr int kDefaultThreshold = 50;

/// Valid-mode 3x3 convolution: output is (w-2) x (h-2) and its origin is the
/// input origin + (1, 1). Throws Error{Degenerate} below 3x3.
SignedGrid convolve3x3(const GrayImage& img, const Kernel3x3& k, unsigned threads = 0);

/// As convolve3x3, each value clamped to [0, 255].
GrayImage convolve3x3_clamped(const GrayImage& img, const Kernel3x3& k, unsigned threads = 0);

/// Laplacian sharpening, clamped.
GrayImage sharpen(const GrayImage& img, unsigned threads = 0);

/// Gradient magnitude round(sqrt(gx^2 + gy^2)), saturated at 255.
EdgeMap sobel(const GrayImage& img, unsigned threads = 0);

/// Keeps pixels with magnitude >= t. Throws Error{Parameter} unless 0 <= t <= 255.
ThresholdedPixels threshold_pixels(const EdgeMap& edges, int t);

/// Edge map rendered as a gray image (for stage dumps).
GrayImage edge_map_image(const EdgeMap& edges);

}  // namespace lowpoly

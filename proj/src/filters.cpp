#include "lowpoly/filters.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lowpoly/error.hpp"
#include "parallel.hpp"

namespace lowpoly {

namespace {

void require_3x3(const GrayImage& img) {
  if (img.width() < 3 || img.height() < 3) {
    throw Error(ErrorKind::Degenerate, "3x3 convolution needs at least a 3x3 image, got " +
                                           std::to_string(img.width()) + "x" + std::to_string(img.height()));
  }
}

std::uint8_t saturate(long v) { return static_cast<std::uint8_t>(std::clamp(v, 0L, 255L)); }

template <typename Sink>
void convolve_rows(const GrayImage& img, const Kernel3x3& k, unsigned threads, Sink&& sink) {
  const int ow = img.width() - 2;
  const int oh = img.height() - 2;
  detail::parallel_rows(oh, threads, [&](int y) {
    for (int x = 0; x < ow; ++x) {
      int acc = 0;
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) acc += k(r, c) * img.at(x + c, y + r);
      sink(x, y, acc);
    }
  });
}

Offset shifted(Offset o) { return {o.dx + 1, o.dy + 1}; }

}  // namespace

SignedGrid convolve3x3(const GrayImage& img, const Kernel3x3& k, unsigned threads) {
  require_3x3(img);
  SignedGrid out;
  out.width = img.width() - 2;
  out.height = img.height() - 2;
  out.origin = shifted(img.origin());
  out.values.assign(static_cast<std::size_t>(out.width) * static_cast<std::size_t>(out.height), 0);
  convolve_rows(img, k, threads, [&](int x, int y, int v) {
    out.values[static_cast<std::size_t>(y) * static_cast<std::size_t>(out.width) + static_cast<std::size_t>(x)] = v;
  });
  return out;
}

GrayImage convolve3x3_clamped(const GrayImage& img, const Kernel3x3& k, unsigned threads) {
  require_3x3(img);
  GrayImage out(img.width() - 2, img.height() - 2, 0, shifted(img.origin()));
  convolve_rows(img, k, threads, [&](int x, int y, int v) { out.at(x, y) = saturate(v); });
  return out;
}

GrayImage sharpen(const GrayImage& img, unsigned threads) {
  return convolve3x3_clamped(img, kSharpenKernel, threads);
}

EdgeMap sobel(const GrayImage& img, unsigned threads) {
  require_3x3(img);
  EdgeMap out;
  out.width = img.width() - 2;
  out.height = img.height() - 2;
  out.offset = shifted(img.origin());
  out.magnitudes.assign(static_cast<std::size_t>(out.width) * static_cast<std::size_t>(out.height), 0);
  detail::parallel_rows(out.height, threads, [&](int y) {
    for (int x = 0; x < out.width; ++x) {
      long gx = 0;
      long gy = 0;
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
          const int v = img.at(x + c, y + r);
          gx += kSobelX(r, c) * v;
          gy += kSobelY(r, c) * v;
        }
      }
      // sqrt of an integer is never exactly k + 0.5, so no tie handling needed.
      const double mag = std::sqrt(static_cast<double>(gx * gx + gy * gy));
      out.magnitudes[static_cast<std::size_t>(y) * static_cast<std::size_t>(out.width) + static_cast<std::size_t>(x)] =
          saturate(static_cast<long>(std::floor(mag + 0.5)));
    }
  });
  return out;
}

ThresholdedPixels threshold_pixels(const EdgeMap& edges, int t) {
  if (t < 0 || t > 255) throw Error(ErrorKind::Parameter, "threshold must be in [0, 255], got " + std::to_string(t));
  ThresholdedPixels out;
  out.threshold_used = t;
  for (int y = 0; y < edges.height; ++y)
    for (int x = 0; x < edges.width; ++x)
      if (edges.at(x, y) >= t) out.coords.push_back({x + edges.offset.dx, y + edges.offset.dy});
  return out;
}

GrayImage edge_map_image(const EdgeMap& edges) {
  return GrayImage(edges.width, edges.height, edges.magnitudes, edges.offset);
}

}  // namespace lowpoly

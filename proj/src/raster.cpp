#include "lowpoly/raster.hpp"

#include <string>

#include "lowpoly/error.hpp"
#include "parallel.hpp"

namespace lowpoly {

namespace {

void check_dims(int width, int height, std::size_t count) {
  if (width < 1 || height < 1) {
    throw Error(ErrorKind::Parameter, "image dimensions must be positive, got " + std::to_string(width) + "x" +
                                          std::to_string(height));
  }
  if (count != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw Error(ErrorKind::Parameter, "pixel count does not match " + std::to_string(width) + "x" +
                                          std::to_string(height));
  }
}

}  // namespace

RasterImage::RasterImage(int width, int height, Rgb fill)
    : width_(width), height_(height) {
  check_dims(width, height, static_cast<std::size_t>(std::max(width, 0)) * static_cast<std::size_t>(std::max(height, 0)));
  pixels_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

RasterImage::RasterImage(int width, int height, std::vector<Rgb> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  check_dims(width, height, pixels_.size());
}

GrayImage::GrayImage(int width, int height, std::uint8_t fill, Offset origin)
    : width_(width), height_(height), origin_(origin) {
  check_dims(width, height, static_cast<std::size_t>(std::max(width, 0)) * static_cast<std::size_t>(std::max(height, 0)));
  values_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> values, Offset origin)
    : width_(width), height_(height), values_(std::move(values)), origin_(origin) {
  check_dims(width, height, values_.size());
}

std::uint8_t luma(Rgb c) noexcept {
  const unsigned weighted = 299u * c.r + 587u * c.g + 114u * c.b;
  return static_cast<std::uint8_t>((weighted + 500u) / 1000u);
}

GrayImage to_grayscale(const RasterImage& img, unsigned threads) {
  GrayImage out(img.width(), img.height());
  detail::parallel_rows(img.height(), threads, [&](int y) {
    const auto src = img.row(y);
    for (int x = 0; x < img.width(); ++x) out.at(x, y) = luma(src[static_cast<std::size_t>(x)]);
  });
  return out;
}

RasterImage gray_to_rgb(const GrayImage& gray) {
  std::vector<Rgb> px;
  px.reserve(gray.values().size());
  for (auto v : gray.values()) px.push_back({v, v, v});
  return RasterImage(gray.width(), gray.height(), std::move(px));
}

void require_pipeline_size(const RasterImage& img) {
  if (img.width() < kMinPipelineSide || img.height() < kMinPipelineSide) {
    throw Error(ErrorKind::Degenerate, "image is " + std::to_string(img.width()) + "x" +
                                           std::to_string(img.height()) + ", at least 5x5 is required");
  }
}

}  // namespace lowpoly

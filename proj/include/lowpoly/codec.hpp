#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "lowpoly/raster.hpp"

namespace lowpoly {

enum class ImageFormat { Unknown, Png, Jpeg };

/// Identifies PNG/JPEG by signature bytes.
ImageFormat sniff_format(std::span<const std::uint8_t> bytes) noexcept;

/// Decodes an 8-bit PNG (gray, RGB, palette, with or without alpha) or a
/// baseline/progressive JPEG. Alpha is composited over white. Throws
/// Error{Decode} with the codec's reason on malformed input.
RasterImage decode_image(std::span<const std::uint8_t> bytes);

/// Lossless 8-bit RGB PNG. Output bytes are a deterministic function of the
/// pixels.
std::vector<std::uint8_t> encode_png(const RasterImage& img);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace lowpoly

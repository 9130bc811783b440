#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lowpoly/filters.hpp"
#include "lowpoly/raster.hpp"

namespace lowpoly {

enum class Provenance : std::uint8_t { Edge, Random, Frame };

const char* to_string(Provenance p);

/// Triangulation vertices in original-image coordinates. `points` and
/// `provenance` are parallel arrays; points are unique.
struct PointSet {
  std::vector<PixelCoord> points;
  std::vector<Provenance> provenance;
  std::uint64_t seed = 0;

  std::size_t size() const noexcept { return points.size(); }
  std::size_t count(Provenance p) const;
};

inline constexpr int kDefaultDensity = 60;

struct SamplerConfig {
  int density = kDefaultDensity;
  std::uint64_t seed = 0;
  bool include_frame = true;
  std::optional<int> random_count;
};

/// Identifier of the sampling RNG, recorded in run metadata. The engine
/// sequence is fixed by the C++ standard; bounded draws use rejection so the
/// stream is identical on every platform.
inline constexpr const char* kRngAlgorithm = "mt19937_64/rejection";

/// Uniform integer in [0, bound). `bound` must be nonzero.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// floor(|S| / d) points drawn uniformly without replacement, returned in
/// (y, x) order. Throws Error{Parameter} for d < 1 and Error{Degenerate} when
/// fewer than 3 points result and cfg.include_frame is off.
PointSet subsample_uniform(const ThresholdedPixels& pixels, const SamplerConfig& cfg);

/// `count` distinct pixels uniform over the image, in (y, x) order. Throws
/// Error{Parameter} unless 3 <= count <= width * height.
PointSet random_points(int width, int height, int count, std::uint64_t seed);

/// Appends the four canvas corners tagged Frame, skipping any already present.
PointSet add_frame_points(PointSet ps, int width, int height);

}  // namespace lowpoly

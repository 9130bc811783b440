#include "lowpoly/sampling.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "lowpoly/error.hpp"

namespace lowpoly {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Edge: return "edge";
    case Provenance::Random: return "random";
    case Provenance::Frame: return "frame";
  }
  return "unknown";
}

std::size_t PointSet::count(Provenance p) const {
  return static_cast<std::size_t>(std::count(provenance.begin(), provenance.end(), p));
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // Reject the low 2^64 mod bound values so every residue is equally likely.
  const std::uint64_t reject_below = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= reject_below) return r % bound;
  }
}

PointSet subsample_uniform(const ThresholdedPixels& pixels, const SamplerConfig& cfg) {
  if (cfg.density < 1) throw Error(ErrorKind::Parameter, "density must be >= 1, got " + std::to_string(cfg.density));
  const std::size_t n = pixels.coords.size();
  const std::size_t k = n / static_cast<std::size_t>(cfg.density);
  if (k < 3 && !cfg.include_frame) {
    throw Error(ErrorKind::Degenerate, "too few points: " + std::to_string(n) + " edge pixels at t=" +
                                           std::to_string(pixels.threshold_used) + " with d=" +
                                           std::to_string(cfg.density) + " leaves " + std::to_string(k) +
                                           " vertices (need 3)");
  }

  // Partial Fisher-Yates over indices into S.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, n - i));
    std::swap(order[i], order[j]);
  }

  PointSet out;
  out.seed = cfg.seed;
  out.points.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.points.push_back(pixels.coords[order[i]]);
  std::sort(out.points.begin(), out.points.end());
  out.provenance.assign(k, Provenance::Edge);
  return out;
}

PointSet random_points(int width, int height, int count, std::uint64_t seed) {
  const long long area = static_cast<long long>(width) * height;
  if (width < 1 || height < 1) throw Error(ErrorKind::Parameter, "image dimensions must be positive");
  if (count < 3 || count > area) {
    throw Error(ErrorKind::Parameter, "random point count must be in [3, " + std::to_string(area) + "], got " +
                                          std::to_string(count));
  }
  std::mt19937_64 rng(seed);
  std::vector<bool> taken(static_cast<std::size_t>(area), false);
  PointSet out;
  out.seed = seed;
  out.points.reserve(static_cast<std::size_t>(count));
  while (out.points.size() < static_cast<std::size_t>(count)) {
    const auto idx = uniform_below(rng, static_cast<std::uint64_t>(area));
    if (taken[idx]) continue;
    taken[idx] = true;
    out.points.push_back({static_cast<int>(idx % static_cast<std::uint64_t>(width)),
                          static_cast<int>(idx / static_cast<std::uint64_t>(width))});
  }
  std::sort(out.points.begin(), out.points.end());
  out.provenance.assign(out.points.size(), Provenance::Random);
  return out;
}

PointSet add_frame_points(PointSet ps, int width, int height) {
  const PixelCoord corners[4] = {{0, 0}, {width - 1, 0}, {0, height - 1}, {width - 1, height - 1}};
  for (const auto& c : corners) {
    if (std::find(ps.points.begin(), ps.points.end(), c) != ps.points.end()) continue;
    ps.points.push_back(c);
    ps.provenance.push_back(Provenance::Frame);
  }
  return ps;
}

}  // namespace lowpoly

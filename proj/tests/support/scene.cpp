#include "scene.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace lowpoly::testing {

namespace {

struct Color {
  double r, g, b;
};

Color mix(Color a, Color b, double t) { return {a.r + (b.r - a.r) * t, a.g + (b.g - a.g) * t, a.b + (b.b - a.b) * t}; }

// Inside test for an ellipse centred at (cx, cy) with semi-axes (rx, ry)
// rotated by angle; returns the normalized radius (< 1 inside).
double ellipse_radius(double x, double y, double cx, double cy, double rx, double ry, double angle) {
  const double dx = x - cx;
  const double dy = y - cy;
  const double u = dx * std::cos(angle) + dy * std::sin(angle);
  const double v = -dx * std::sin(angle) + dy * std::cos(angle);
  return std::sqrt((u * u) / (rx * rx) + (v * v) / (ry * ry));
}

struct Pad {
  double cx, cy, r, notch;
};

}  // namespace

RasterImage make_pond_scene(int width, int height, std::uint64_t seed) {
  RasterImage img(width, height);
  const double s = std::min(width, height) / 480.0;
  const double pi = std::numbers::pi;
  const Pad pads[] = {
      {0.18 * width, 0.72 * height, 95 * s, 0.6},  {0.80 * width, 0.25 * height, 80 * s, 2.4},
      {0.75 * width, 0.80 * height, 70 * s, 4.0},  {0.12 * width, 0.18 * height, 55 * s, 1.2},
      {0.45 * width, 0.90 * height, 45 * s, 5.2},
  };
  const double fx = 0.48 * width;
  const double fy = 0.46 * height;
  const int petals = 14;

  std::mt19937_64 rng(seed);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double t = static_cast<double>(y) / height;
      Color c = mix({18, 52, 84}, {46, 104, 122}, t);
      const double ripple = std::sin(0.11 * y / s + 2.5 * std::sin(0.017 * x / s)) + 0.5 * std::sin(0.045 * (x + 2 * y) / s);
      c = mix(c, ripple > 0.6 ? Color{120, 170, 190} : Color{10, 35, 60}, std::min(1.0, std::abs(ripple) * 0.35));

      for (const auto& p : pads) {
        const double dx = x - p.cx;
        const double dy = y - p.cy;
        const double r = std::hypot(dx, dy) / p.r;
        double ang = std::atan2(dy, dx) - p.notch;
        ang = std::remainder(ang, 2 * pi);
        if (r < 1.0 && std::abs(ang) > 0.22) {
          const double vein = 0.5 + 0.5 * std::cos(ang * 11.0);
          c = mix({34, 96, 40}, {90, 150, 60}, 0.25 + 0.5 * r * vein);
          if (r > 0.93) c = mix(c, {150, 60, 70}, 0.8);
        }
      }

      // Petals, outer ring first, then an inner ring.
      for (int ring = 0; ring < 2; ++ring) {
        const double len = (ring == 0 ? 78 : 52) * s;
        const double wid = (ring == 0 ? 20 : 15) * s;
        for (int k = 0; k < petals; ++k) {
          const double a = 2 * pi * (k + 0.5 * ring) / petals;
          const double cx = fx + std::cos(a) * len * 0.85;
          const double cy = fy + std::sin(a) * len * 0.55;
          const double r = ellipse_radius(x, y, cx, cy, len * 0.6, wid, a);
          if (r < 1.0) {
            c = mix({255, 246, 250}, {228, 120, 170}, std::clamp(r * 1.1, 0.0, 1.0));
            if (r > 0.9) c = mix(c, {150, 50, 100}, 0.7);
          }
        }
      }
      const double rc = std::hypot(x - fx, (y - fy) * 1.2) / (24 * s);
      if (rc < 1.0) {
        c = mix({250, 214, 40}, {200, 140, 20}, rc);
        if (std::fmod(std::abs(std::atan2(y - fy, x - fx)) * 8.0, 1.0) < 0.18) c = {160, 90, 10};
      }

      const double noise = static_cast<double>(rng() % 3) - 1.0;
      auto to8 = [&](double v) { return static_cast<std::uint8_t>(std::clamp(std::lround(v + noise), 0L, 255L)); };
      img.at(x, y) = {to8(c.r), to8(c.g), to8(c.b)};
    }
  }
  return img;
}

}  // namespace lowpoly::testing

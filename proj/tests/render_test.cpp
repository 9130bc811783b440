#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "lowpoly/delaunay.hpp"
#include "lowpoly/error.hpp"
#include "lowpoly/render.hpp"
#include "oracles.hpp"

namespace lowpoly {
namespace {

constexpr Rgb kBlack{0, 0, 0};
constexpr Rgb kWhite{255, 255, 255};

Triangulation framed_random_mesh(std::mt19937_64& rng, std::size_t n, int w, int h) {
  auto pts = testing::random_vertices(rng, n, w, h);
  for (Vertex c : {Vertex{0, 0}, Vertex{w - 1, 0}, Vertex{0, h - 1}, Vertex{w - 1, h - 1}})
    if (std::find(pts.begin(), pts.end(), c) == pts.end()) pts.push_back(c);
  return triangulate(pts);
}

std::vector<Rgb> distinct_colors(std::size_t n) {
  std::vector<Rgb> c;
  for (std::size_t i = 0; i < n; ++i)
    c.push_back({static_cast<std::uint8_t>(i & 0xff), static_cast<std::uint8_t>((i >> 8) & 0xff), 7});
  return c;
}

TEST(TriangleColor, DirectLookup) {
  RasterImage img(4, 4, Rgb{1, 1, 1});
  img.at(1, 1) = {10, 20, 30};
  const std::vector<Vertex> v{{0, 0}, {3, 0}, {0, 3}};
  EXPECT_EQ(triangle_color({0, 1, 2}, v, img), (Rgb{10, 20, 30}));
}

TEST(TriangleColor, UniformImage) {
  const RasterImage red(40, 30, Rgb{255, 0, 0});
  std::mt19937_64 rng(1);
  const Triangulation m = framed_random_mesh(rng, 30, 40, 30);
  for (const Rgb& c : triangle_colors(m, red)) EXPECT_EQ(c, (Rgb{255, 0, 0}));
}

TEST(TriangleColor, EqualsPixelAtCentroid) {
  std::mt19937_64 rng(2);
  RasterImage img(50, 40);
  for (auto& p : img.pixels()) p = {static_cast<std::uint8_t>(rng()), static_cast<std::uint8_t>(rng()), 0};
  const Triangulation m = framed_random_mesh(rng, 60, 50, 40);
  const auto colors = triangle_colors(m, img);
  for (std::size_t i = 0; i < m.triangles.size(); ++i) {
    const auto& t = m.triangles[i];
    long sx = 0, sy = 0;
    for (int idx : {t.a, t.b, t.c}) {
      sx += m.vertices[static_cast<std::size_t>(idx)].x;
      sy += m.vertices[static_cast<std::size_t>(idx)].y;
    }
    // Nonnegative sums: floor((2s + 3) / 6) rounds s/3 half up.
    const int cx = static_cast<int>((2 * sx + 3) / 6);
    const int cy = static_cast<int>((2 * sy + 3) / 6);
    EXPECT_EQ(colors[i], img.at(cx, cy));
  }
}

TEST(Coverage, TwoByTwoSquarePaintedOnce) {
  const Triangulation m = triangulate(std::vector<Vertex>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const Coverage cov = compute_coverage(m, 2, 2);
  for (int y = 0; y < 2; ++y)
    for (int x = 0; x < 2; ++x) EXPECT_GE(cov.owner_at(x, y), 0);
  for (auto c : cov.claims) EXPECT_LE(c, 1);
}

TEST(Coverage, SingleTriangleAgainstBackground) {
  Triangulation m;
  m.vertices = {{0, 0}, {15, 0}, {0, 11}};
  m.triangles = {{0, 1, 2}};
  const std::vector<Rgb> colors{{200, 100, 50}};
  const RasterImage out = rasterize(m, colors, 16, 12, Rgb{9, 9, 9});
  for (int y = 0; y < 12; ++y)
    for (int x = 0; x < 16; ++x) {
      const bool in = testing::contains_closed(m.vertices[0], m.vertices[1], m.vertices[2], x, y);
      EXPECT_EQ(out.at(x, y), in ? colors[0] : (Rgb{9, 9, 9})) << x << "," << y;
    }
}

TEST(Coverage, FullCanvasFrame) {
  const Triangulation m = triangulate(std::vector<Vertex>{{0, 0}, {9, 0}, {0, 6}, {9, 6}});
  const RasterImage out = rasterize(m, std::vector<Rgb>{{1, 2, 3}, {1, 2, 3}}, 10, 7);
  for (const Rgb& p : out.pixels()) EXPECT_EQ(p, (Rgb{1, 2, 3}));
}

TEST(Coverage, MatchesBruteForceOwner) {
  std::mt19937_64 rng(50);
  for (int trial = 0; trial < 10; ++trial) {
    const int w = 40 + trial * 3, h = 30 + trial * 2;
    auto pts = testing::random_vertices(rng, 50, w, h);
    const Triangulation m = triangulate(pts);
    const Coverage cov = compute_coverage(m, w, h);
    const auto expect = testing::owner_oracle(m, w, h);
    EXPECT_EQ(cov.owner, expect);
    for (auto c : cov.claims) EXPECT_LE(c, 1);
  }
}

TEST(Coverage, InteriorPaintedExactlyOnce) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const Triangulation m = framed_random_mesh(rng, 40 + static_cast<std::size_t>(trial) * 10, 64, 48);
    const Coverage cov = compute_coverage(m, 64, 48);
    for (int y = 1; y < 47; ++y)
      for (int x = 1; x < 63; ++x) ASSERT_EQ(cov.claims[static_cast<std::size_t>(y * 64 + x)], 1) << x << "," << y;
    for (int o : cov.owner) EXPECT_GE(o, 0);
  }
}

TEST(Coverage, GridOfCocircularCells) {
  std::vector<Vertex> pts;
  for (int y = 0; y < 5; ++y)
    for (int x = 0; x < 5; ++x) pts.push_back({x * 4, y * 4});
  const Triangulation m = triangulate(pts);
  const Coverage cov = compute_coverage(m, 17, 17);
  EXPECT_EQ(cov.owner, testing::owner_oracle(m, 17, 17));
  for (int y = 1; y < 16; ++y)
    for (int x = 1; x < 16; ++x) EXPECT_EQ(cov.claims[static_cast<std::size_t>(y * 17 + x)], 1);
}

TEST(Rasterize, PermutationIndependent) {
  std::mt19937_64 rng(12);
  const Triangulation m = framed_random_mesh(rng, 80, 70, 50);
  const auto colors = distinct_colors(m.triangles.size());
  const RasterImage a = rasterize(m, colors, 70, 50);

  std::vector<std::size_t> perm(m.triangles.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  for (int round = 0; round < 3; ++round) {
    std::shuffle(perm.begin(), perm.end(), rng);
    Triangulation p;
    p.vertices = m.vertices;
    std::vector<Rgb> pc;
    for (std::size_t i : perm) {
      Triangle t = m.triangles[i];
      if (round == 1) t = {t.b, t.c, t.a};
      p.triangles.push_back(t);
      pc.push_back(colors[i]);
    }
    EXPECT_EQ(rasterize(p, pc, 70, 50), a);
  }
}

TEST(Rasterize, Errors) {
  Triangulation m;
  m.vertices = {{0, 0}, {10, 0}, {0, 5}};
  m.triangles = {{0, 1, 2}};
  EXPECT_THROW(rasterize(m, std::vector<Rgb>{kBlack}, 10, 6), Error);
  EXPECT_THROW(rasterize(m, std::vector<Rgb>{}, 11, 6), Error);
  EXPECT_THROW(render_wireframe(m, 10, 6), Error);
  EXPECT_NO_THROW(rasterize(m, std::vector<Rgb>{kBlack}, 11, 6));
}

TEST(Wireframe, OneTriangleIsThreeSegments) {
  Triangulation m;
  m.vertices = {{2, 3}, {25, 7}, {9, 19}};
  m.triangles = {{0, 1, 2}};
  const RasterImage img = render_wireframe(m, 30, 24);

  std::size_t black = 0;
  for (const Rgb& p : img.pixels()) {
    EXPECT_TRUE(p == kBlack || p == kWhite);
    black += p == kBlack;
  }
  std::size_t budget = 0;
  const std::pair<int, int> edges[] = {{0, 1}, {1, 2}, {0, 2}};
  for (auto [i, j] : edges) {
    const Vertex a = m.vertices[static_cast<std::size_t>(i)], b = m.vertices[static_cast<std::size_t>(j)];
    const int dx = b.x - a.x, dy = b.y - a.y;
    const int steps = std::max(std::abs(dx), std::abs(dy));
    budget += static_cast<std::size_t>(steps) + 1;
    // One black pixel per step along the major axis, within half a pixel of the segment.
    for (int k = 0; k <= steps; ++k) {
      const double fx = a.x + dx * static_cast<double>(k) / steps;
      const double fy = a.y + dy * static_cast<double>(k) / steps;
      bool hit = false;
      for (int oy = -1; oy <= 1; ++oy)
        for (int ox = -1; ox <= 1; ++ox) {
          const int x = static_cast<int>(std::lround(fx)) + ox, y = static_cast<int>(std::lround(fy)) + oy;
          if (std::abs(x - fx) <= 0.5 + 1e-9 && std::abs(y - fy) <= 0.5 + 1e-9 && img.at(x, y) == kBlack) hit = true;
        }
      EXPECT_TRUE(hit) << "edge " << i << "-" << j << " step " << k;
    }
  }
  EXPECT_LE(black, budget);
  EXPECT_GE(black, budget - 3);  // shared corners
  for (const Vertex& v : m.vertices) EXPECT_EQ(img.at(v.x, v.y), kBlack);
}

TEST(Wireframe, SharedEdgesDrawnOnce) {
  std::mt19937_64 rng(5);
  const Triangulation m = framed_random_mesh(rng, 40, 60, 40);
  const RasterImage a = render_wireframe(m, 60, 40);
  EXPECT_EQ(render_wireframe(m, 60, 40), a);
  // The frame border is a union of hull edges, so it is fully black.
  for (int x = 0; x < 60; ++x) {
    EXPECT_EQ(a.at(x, 0), kBlack);
    EXPECT_EQ(a.at(x, 39), kBlack);
  }
}

}  // namespace
}  // namespace lowpoly

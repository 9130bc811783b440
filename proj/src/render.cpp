#include "lowpoly/render.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

#include "lowpoly/error.hpp"

namespace lowpoly {

Rgb triangle_color(const Triangle& tri, std::span<const Vertex> verts, const RasterImage& original) {
  return original.at(centroid(tri, verts, original.width(), original.height()));
}

std::vector<Rgb> triangle_colors(const Triangulation& mesh, const RasterImage& original) {
  std::vector<Rgb> colors;
  colors.reserve(mesh.triangles.size());
  for (const auto& t : mesh.triangles) colors.push_back(triangle_color(t, mesh.vertices, original));
  return colors;
}

namespace {

void require_on_canvas(const Triangulation& mesh, int width, int height) {
  for (const auto& v : mesh.vertices) {
    if (v.x < 0 || v.y < 0 || v.x >= width || v.y >= height) {
      throw Error(ErrorKind::Parameter, "vertex (" + std::to_string(v.x) + ", " + std::to_string(v.y) +
                                            ") lies outside the " + std::to_string(width) + "x" +
                                            std::to_string(height) + " canvas");
    }
  }
}

// Edge a->b owns the pixels lying exactly on it iff the (1, delta) nudge moves
// them to the interior side.
bool owns_ties(std::int64_t dx, std::int64_t dy) { return dy < 0 || (dy == 0 && dx > 0); }

}  // namespace

Coverage compute_coverage(const Triangulation& mesh, int width, int height) {
  require_on_canvas(mesh, width, height);
  const std::size_t n = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  Coverage cov;
  cov.width = width;
  cov.height = height;
  cov.owner.assign(n, -1);
  cov.claims.assign(n, 0);
  std::vector<int> boundary(n, -1);

  std::vector<std::array<int, 3>> keys;
  keys.reserve(mesh.triangles.size());
  for (const auto& t : mesh.triangles) keys.push_back(t.sorted());

  for (std::size_t ti = 0; ti < mesh.triangles.size(); ++ti) {
    const Triangle& t = mesh.triangles[ti];
    Vertex v[3] = {mesh.vertices[static_cast<std::size_t>(t.a)], mesh.vertices[static_cast<std::size_t>(t.b)],
                   mesh.vertices[static_cast<std::size_t>(t.c)]};
    if (orient2d(v[0], v[1], v[2]) < 0) std::swap(v[1], v[2]);

    std::int64_t ex[3], ey[3];
    bool ties[3];
    for (int e = 0; e < 3; ++e) {
      ex[e] = v[(e + 1) % 3].x - v[e].x;
      ey[e] = v[(e + 1) % 3].y - v[e].y;
      ties[e] = owns_ties(ex[e], ey[e]);
    }
    const int x0 = std::min({v[0].x, v[1].x, v[2].x});
    const int x1 = std::max({v[0].x, v[1].x, v[2].x});
    const int y0 = std::min({v[0].y, v[1].y, v[2].y});
    const int y1 = std::max({v[0].y, v[1].y, v[2].y});

    for (int y = y0; y <= y1; ++y) {
      for (int x = x0; x <= x1; ++x) {
        bool closed = true;
        bool open = true;
        for (int e = 0; e < 3 && closed; ++e) {
          const std::int64_t f = ex[e] * (y - v[e].y) - ey[e] * (x - v[e].x);
          if (f < 0) closed = false;
          else if (f == 0 && !ties[e]) open = false;
        }
        if (!closed) continue;
        const std::size_t idx = static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x);
        if (open) {
          cov.owner[idx] = static_cast<int>(ti);
          ++cov.claims[idx];
        } else if (boundary[idx] < 0 || keys[ti] < keys[static_cast<std::size_t>(boundary[idx])]) {
          boundary[idx] = static_cast<int>(ti);
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (cov.claims[i] == 0) cov.owner[i] = boundary[i];
  return cov;
}

RasterImage rasterize(const Triangulation& mesh, std::span<const Rgb> colors, int width, int height, Rgb background) {
  if (colors.size() != mesh.triangles.size()) {
    throw Error(ErrorKind::Parameter, "color count " + std::to_string(colors.size()) + " does not match triangle count " +
                                          std::to_string(mesh.triangles.size()));
  }
  const Coverage cov = compute_coverage(mesh, width, height);
  RasterImage out(width, height, background);
  auto px = out.pixels();
  for (std::size_t i = 0; i < px.size(); ++i)
    if (cov.owner[i] >= 0) px[i] = colors[static_cast<std::size_t>(cov.owner[i])];
  return out;
}

namespace {

void draw_line(RasterImage& img, Vertex a, Vertex b, Rgb color) {
  int x = a.x;
  int y = a.y;
  const int dx = std::abs(b.x - a.x);
  const int dy = -std::abs(b.y - a.y);
  const int sx = a.x < b.x ? 1 : -1;
  const int sy = a.y < b.y ? 1 : -1;
  int err = dx + dy;
  for (;;) {
    img.at(x, y) = color;
    if (x == b.x && y == b.y) break;
    const int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      x += sx;
    }
    if (e2 <= dx) {
      err += dx;
      y += sy;
    }
  }
}

}  // namespace

RasterImage render_wireframe(const Triangulation& mesh, int width, int height) {
  require_on_canvas(mesh, width, height);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(mesh.triangles.size() * 3);
  for (const auto& t : mesh.triangles) {
    const int idx[3] = {t.a, t.b, t.c};
    for (int e = 0; e < 3; ++e) edges.emplace_back(std::minmax(idx[e], idx[(e + 1) % 3]));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  RasterImage img(width, height, Rgb{255, 255, 255});
  for (const auto& [i, j] : edges)
    draw_line(img, mesh.vertices[static_cast<std::size_t>(i)], mesh.vertices[static_cast<std::size_t>(j)], Rgb{0, 0, 0});
  return img;
}

}  // namespace lowpoly

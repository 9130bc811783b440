#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lowpoly/delaunay.hpp"
#include "lowpoly/raster.hpp"

namespace lowpoly {

/// Color of the original image at the triangle's rounded, clamped centroid.
Rgb triangle_color(const Triangle& tri, std::span<const Vertex> verts, const RasterImage& original);

/// triangle_color for every triangle, in list order.
std::vector<Rgb> triangle_colors(const Triangulation& mesh, const RasterImage& original);

/// Per-pixel triangle assignment.
///
/// A vertex at (x, y) sits at the center of pixel (x, y), so sampling pixel
/// centers is exact integer arithmetic. A pixel belongs to the triangle that
/// contains it under the top-left rule (equivalently: the sample point is
/// nudged by an infinitesimal (1, delta)), which partitions the hull
/// interior. Pixels on the hull boundary left unclaimed by that rule go to the
/// closed-containing triangle with the smallest sorted index triple.
struct Coverage {
  int width = 0;
  int height = 0;
  std::vector<int> owner;             // triangle index, -1 outside the hull
  std::vector<std::uint8_t> claims;   // number of top-left-rule claims

  int owner_at(int x, int y) const { return owner[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)]; }
};

/// Throws Error{Parameter} if a vertex lies outside the canvas.
Coverage compute_coverage(const Triangulation& mesh, int width, int height);

/// Fills each triangle with its color; pixels outside the hull get
/// `background`. `colors` is parallel to mesh.triangles.
RasterImage rasterize(const Triangulation& mesh, std::span<const Rgb> colors, int width, int height,
                      Rgb background = {});

/// White canvas with every mesh edge drawn as a 1-pixel black Bresenham line.
RasterImage render_wireframe(const Triangulation& mesh, int width, int height);

}  // namespace lowpoly

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "lowpoly/raster.hpp"
#include "lowpoly/sampling.hpp"

namespace lowpoly {

struct Vertex {
  std::int32_t x = 0;
  std::int32_t y = 0;
  friend constexpr bool operator==(Vertex, Vertex) = default;
};

/// Indices into Triangulation::vertices.
///
/// Orientation convention: with raw image coordinates (x right, y down),
/// every stored triangle has positive orient2d, i.e.
/// (b - a) x (c - a) > 0. On screen that reads clockwise because y points
/// down; in the usual y-up frame it is counter-clockwise.
struct Triangle {
  int a = 0;
  int b = 0;
  int c = 0;

  std::array<int, 3> sorted() const;
  friend constexpr bool operator==(const Triangle&, const Triangle&) = default;
};

struct Triangulation {
  std::vector<Vertex> vertices;
  std::vector<Triangle> triangles;
};

/// Coordinates beyond this magnitude are rejected by triangulate.
inline constexpr std::int32_t kMaxCoordinate = 1 << 20;

/// Sign of (b - a) x (c - a), exact.
int orient2d(Vertex a, Vertex b, Vertex c);

/// True iff p lies strictly inside the circle through a, b, c (either
/// orientation). Exact. Throws Error{Degenerate} if a, b, c are collinear.
bool in_circumcircle(Vertex a, Vertex b, Vertex c, Vertex p);

/// Delaunay triangulation by Bowyer-Watson insertion in (y, x) order.
///
/// The super-triangle is placed symbolically at infinity, so it never
/// interacts with the input and the result always covers the convex hull.
/// Triangles are listed by ascending sorted index triple and each is rotated
/// to start at its smallest index. Where four or more points are cocircular
/// the diagonal with the lexicographically smaller sorted index pair is kept.
///
/// Vertex i of the result is point i of the input. Throws Error{Degenerate}
/// for fewer than 3 points, duplicates or an all-collinear input, and
/// Error{Parameter} for coordinates beyond kMaxCoordinate.
Triangulation triangulate(std::span<const Vertex> points);
Triangulation triangulate(const PointSet& ps);

/// Vertex average rounded to nearest (ties away from zero).
PixelCoord centroid(const Triangle& tri, std::span<const Vertex> verts);

/// As above, clamped into [0, width) x [0, height).
PixelCoord centroid(const Triangle& tri, std::span<const Vertex> verts, int width, int height);

}  // namespace lowpoly

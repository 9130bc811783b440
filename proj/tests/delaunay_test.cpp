#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "lowpoly/delaunay.hpp"
#include "lowpoly/error.hpp"
#include "oracles.hpp"

namespace lowpoly {
namespace {

using testing::convex_hull;
using testing::empty_circle_violations;
using testing::random_vertices;

std::set<std::pair<int, int>> edges_of(const Triangulation& m) {
  std::set<std::pair<int, int>> out;
  for (const auto& t : m.triangles) {
    const int v[3] = {t.a, t.b, t.c};
    for (int i = 0; i < 3; ++i) out.insert(std::minmax(v[i], v[(i + 1) % 3]));
  }
  return out;
}

ErrorKind kind_of(const std::vector<Vertex>& pts) {
  try {
    triangulate(pts);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::Io;
}

TEST(InCircumcircle, Examples) {
  const Vertex a{0, 0}, b{2, 0}, c{0, 2};
  EXPECT_TRUE(in_circumcircle(a, b, c, {1, 1}));
  EXPECT_FALSE(in_circumcircle(a, b, c, {3, 3}));
  EXPECT_FALSE(in_circumcircle(a, b, c, {2, 2}));
  // Orientation of the triangle does not matter.
  EXPECT_TRUE(in_circumcircle(a, c, b, {1, 1}));
  EXPECT_FALSE(in_circumcircle(a, c, b, {2, 2}));
}

TEST(InCircumcircle, CollinearThrows) {
  try {
    in_circumcircle({0, 0}, {1, 1}, {2, 2}, {5, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Degenerate);
  }
}

TEST(InCircumcircle, MatchesRationalOracle) {
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 20000) {
    const auto v = random_vertices(rng, 4, 50, 50);
    if (orient2d(v[0], v[1], v[2]) == 0) continue;
    ASSERT_EQ(in_circumcircle(v[0], v[1], v[2], v[3]), testing::in_circle_oracle(v[0], v[1], v[2], v[3]));
    ++checked;
  }
}

TEST(InCircumcircle, LargeCoordinates) {
  const int m = kMaxCoordinate;
  EXPECT_TRUE(in_circumcircle({-m, -m}, {m, -m}, {-m, m}, {m - 1, m - 1}));
  EXPECT_FALSE(in_circumcircle({-m, -m}, {m, -m}, {-m, m}, {m, m}));
  EXPECT_EQ(in_circumcircle({-m, -m}, {m, -m}, {-m + 1, m}, {m, m - 1}),
            testing::in_circle_oracle({-m, -m}, {m, -m}, {-m + 1, m}, {m, m - 1}));
}

TEST(Orient2d, Sign) {
  EXPECT_EQ(orient2d({0, 0}, {1, 0}, {0, 1}), 1);
  EXPECT_EQ(orient2d({0, 0}, {0, 1}, {1, 0}), -1);
  EXPECT_EQ(orient2d({0, 0}, {1, 1}, {3, 3}), 0);
}

TEST(Centroid, Examples) {
  const std::vector<Vertex> v1{{0, 0}, {3, 0}, {0, 3}};
  EXPECT_EQ(centroid({0, 1, 2}, v1), (PixelCoord{1, 1}));
  const std::vector<Vertex> v2{{0, 0}, {1, 0}, {0, 1}};
  EXPECT_EQ(centroid({0, 1, 2}, v2), (PixelCoord{0, 0}));
  const std::vector<Vertex> v3{{0, 0}, {2, 0}, {0, 2}};
  EXPECT_EQ(centroid({0, 1, 2}, v3), (PixelCoord{1, 1}));
}

TEST(Centroid, RoundsHalfThirdsAndNegatives) {
  // 5/3 -> 2, 4/3 -> 1, -4/3 -> -1, -5/3 -> -2
  const std::vector<Vertex> v{{0, 0}, {2, 1}, {3, 3}, {-2, -1}, {-3, -3}};
  EXPECT_EQ(centroid({0, 1, 2}, v), (PixelCoord{2, 1}));
  EXPECT_EQ(centroid({0, 3, 4}, v), (PixelCoord{-2, -1}));
}

TEST(Centroid, ClampsIntoImage) {
  const std::vector<Vertex> v{{-3, -3}, {-3, 0}, {0, -3}};
  EXPECT_EQ(centroid({0, 1, 2}, v, 10, 10), (PixelCoord{0, 0}));
  const std::vector<Vertex> w{{20, 20}, {21, 20}, {20, 21}};
  EXPECT_EQ(centroid({0, 1, 2}, w, 10, 10), (PixelCoord{9, 9}));
}

TEST(Triangulate, ThreePoints) {
  const std::vector<Vertex> pts{{5, 5}, {0, 9}, {9, 0}};
  const Triangulation m = triangulate(pts);
  ASSERT_EQ(m.triangles.size(), 1u);
  EXPECT_EQ(m.triangles[0].sorted(), (std::array<int, 3>{0, 1, 2}));
  EXPECT_EQ(m.triangles[0].a, 0);
  EXPECT_GT(orient2d(m.vertices[0], m.vertices[static_cast<std::size_t>(m.triangles[0].b)],
                     m.vertices[static_cast<std::size_t>(m.triangles[0].c)]),
            0);
}

TEST(Triangulate, UnitSquareTakesSmallerDiagonal) {
  const std::vector<Vertex> pts{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  const Triangulation m = triangulate(pts);
  ASSERT_EQ(m.triangles.size(), 2u);
  EXPECT_TRUE(edges_of(m).count({0, 3}));
  EXPECT_FALSE(edges_of(m).count({1, 2}));
  EXPECT_EQ(empty_circle_violations(m), 0u);

  // Relabel so the other diagonal has the smaller pair.
  const std::vector<Vertex> swapped{{1, 0}, {0, 0}, {1, 1}, {0, 1}};
  const Triangulation n = triangulate(swapped);
  EXPECT_TRUE(edges_of(n).count({0, 3}));  // now (1,0)-(0,1)
  EXPECT_EQ(empty_circle_violations(n), 0u);
}

TEST(Triangulate, FiftyRandomPointsAreDelaunay) {
  std::mt19937_64 rng(50);
  for (int trial = 0; trial < 20; ++trial) {
    const auto pts = random_vertices(rng, 50, 100, 80);
    const Triangulation m = triangulate(pts);
    EXPECT_EQ(empty_circle_violations(m), 0u);
    EXPECT_TRUE(testing::tiles_hull(m));
    EXPECT_TRUE(testing::edges_manifold(m));
    EXPECT_EQ(m.vertices, pts);
  }
}

TEST(Triangulate, EulerCountInGeneralPosition) {
  // Spreading the points out and jittering them keeps them off common circles.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto pts = random_vertices(rng, 5 + trial * 5, 200, 200);
    for (auto& p : pts) {
      p.x = p.x * 1009 + static_cast<int>(rng() % 997);
      p.y = p.y * 1013 + static_cast<int>(rng() % 991);
    }
    const Triangulation m = triangulate(pts);
    const std::size_t h = testing::hull_boundary_count(pts);
    EXPECT_EQ(m.triangles.size(), 2 * pts.size() - 2 - h);
    EXPECT_EQ(empty_circle_violations(m), 0u);
  }
}

TEST(Triangulate, GridWithManyCocircularQuads) {
  std::vector<Vertex> pts;
  for (int y = 0; y < 8; ++y)
    for (int x = 0; x < 9; ++x) pts.push_back({x * 3, y * 3});
  const Triangulation m = triangulate(pts);
  EXPECT_EQ(m.triangles.size(), 2u * 8 * 7);
  EXPECT_EQ(empty_circle_violations(m), 0u);
  EXPECT_TRUE(testing::tiles_hull(m));
  // Every cell is split by its (top-left, bottom-right) diagonal, the one
  // whose sorted index pair is smaller.
  const auto e = edges_of(m);
  for (int y = 0; y < 7; ++y)
    for (int x = 0; x < 8; ++x) {
      const int tl = y * 9 + x, tr = tl + 1, bl = tl + 9, br = bl + 1;
      EXPECT_TRUE(e.count({tl, br}));
      EXPECT_FALSE(e.count({tr, bl}));
    }
}

TEST(Triangulate, RegularPolygonOnOneCircle) {
  // Eight points on x^2 + y^2 = 25 plus nothing else: any fan is Delaunay,
  // the tie-break picks the one built from the smallest diagonals.
  const std::vector<Vertex> pts{{5, 0}, {4, 3}, {3, 4}, {0, 5}, {-3, 4}, {-4, 3}, {-5, 0}, {0, -5}};
  const Triangulation m = triangulate(pts);
  EXPECT_EQ(m.triangles.size(), 6u);
  EXPECT_EQ(empty_circle_violations(m), 0u);
  EXPECT_TRUE(testing::tiles_hull(m));
  const auto e = edges_of(m);
  for (int k = 2; k <= 6; ++k) EXPECT_TRUE(e.count({0, k})) << k;
}

TEST(Triangulate, Deterministic) {
  std::mt19937_64 rng(3);
  const auto pts = random_vertices(rng, 300, 500, 400);
  const Triangulation m = triangulate(pts);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(triangulate(pts).triangles, m.triangles);
}

TEST(Triangulate, IndependentOfInputOrder) {
  std::mt19937_64 rng(9);
  auto pts = random_vertices(rng, 120, 60, 60);
  const Triangulation m = triangulate(pts);
  std::vector<int> perm(pts.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Vertex> shuffled(pts.size());
  for (std::size_t i = 0; i < perm.size(); ++i) shuffled[static_cast<std::size_t>(perm[i])] = pts[i];
  const Triangulation n = triangulate(shuffled);
  // Same edge set after mapping back, unless a cocircular tie was broken
  // by index; both must satisfy the empty-circle test either way.
  EXPECT_EQ(empty_circle_violations(n), 0u);
  EXPECT_EQ(n.triangles.size(), m.triangles.size());
}

TEST(Triangulate, OrderingAndOrientation) {
  std::mt19937_64 rng(21);
  const auto pts = random_vertices(rng, 200, 300, 300);
  const Triangulation m = triangulate(pts);
  for (std::size_t i = 0; i < m.triangles.size(); ++i) {
    const auto& t = m.triangles[i];
    EXPECT_LT(t.a, t.b);
    EXPECT_LT(t.a, t.c);
    EXPECT_GT(orient2d(pts[static_cast<std::size_t>(t.a)], pts[static_cast<std::size_t>(t.b)],
                       pts[static_cast<std::size_t>(t.c)]),
              0);
    if (i > 0) {
      EXPECT_LT(m.triangles[i - 1].sorted(), t.sorted());
    }
  }
}

TEST(Triangulate, CollinearRunOnHull) {
  // Many points on the frame border plus a few inside.
  std::vector<Vertex> pts;
  for (int x = 0; x <= 20; ++x) pts.push_back({x, 0});
  for (int x = 0; x <= 20; ++x) pts.push_back({x, 15});
  for (int y = 1; y < 15; ++y) pts.push_back({0, y});
  pts.push_back({7, 5});
  pts.push_back({13, 9});
  const Triangulation m = triangulate(pts);
  EXPECT_EQ(empty_circle_violations(m), 0u);
  EXPECT_TRUE(testing::tiles_hull(m));
  EXPECT_TRUE(testing::edges_manifold(m));
  EXPECT_EQ(m.triangles.size(), 2 * pts.size() - 2 - testing::hull_boundary_count(pts));
}

TEST(Triangulate, Errors) {
  EXPECT_EQ(kind_of({{0, 0}, {1, 1}}), ErrorKind::Degenerate);
  EXPECT_EQ(kind_of({{0, 0}, {1, 1}, {2, 2}, {5, 5}}), ErrorKind::Degenerate);
  EXPECT_EQ(kind_of({{0, 0}, {1, 0}, {0, 1}, {1, 0}}), ErrorKind::Degenerate);
  EXPECT_EQ(kind_of({{0, 0}, {kMaxCoordinate * 2 + 1, 0}, {0, 1}}), ErrorKind::Parameter);
}

TEST(Triangulate, FromPointSet) {
  PointSet ps;
  ps.points = {{0, 0}, {4, 0}, {0, 4}, {4, 4}, {2, 1}};
  ps.provenance.assign(5, Provenance::Edge);
  const Triangulation m = triangulate(ps);
  EXPECT_EQ(m.vertices.size(), 5u);
  EXPECT_EQ(m.triangles.size(), 4u);
  EXPECT_EQ(empty_circle_violations(m), 0u);
}

}  // namespace
}  // namespace lowpoly

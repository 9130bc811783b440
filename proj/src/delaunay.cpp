#include "lowpoly/delaunay.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lowpoly/error.hpp"
#include "predicates.hpp"

namespace lowpoly {

std::array<int, 3> Triangle::sorted() const {
  std::array<int, 3> s{a, b, c};
  std::sort(s.begin(), s.end());
  return s;
}

int orient2d(Vertex a, Vertex b, Vertex c) { return detail::orient_exact(a.x, a.y, b.x, b.y, c.x, c.y); }

bool in_circumcircle(Vertex a, Vertex b, Vertex c, Vertex p) {
  const int o = orient2d(a, b, c);
  if (o == 0) throw Error(ErrorKind::Degenerate, "circumcircle of collinear triangle is undefined");
  return o * detail::incircle_exact(a.x, a.y, b.x, b.y, c.x, c.y, p.x, p.y) > 0;
}

namespace {

// Rounds s / 3 to nearest. Thirds never land on .5, so ties cannot occur.
int round_third(long s) {
  const long n = s + 1;
  return static_cast<int>(n >= 0 ? n / 3 : -((-n + 2) / 3));
}

constexpr int kNone = -1;

struct Tri {
  std::array<int, 3> v;
  std::array<int, 3> nbr;  // nbr[i] lies across the edge opposite v[i]
  bool alive = true;
};

class BowyerWatson {
 public:
  explicit BowyerWatson(std::span<const Vertex> input) : n_(static_cast<int>(input.size())) {
    std::int64_t minx = input[0].x, maxx = input[0].x, miny = input[0].y, maxy = input[0].y;
    for (const auto& v : input) {
      minx = std::min<std::int64_t>(minx, v.x);
      maxx = std::max<std::int64_t>(maxx, v.x);
      miny = std::min<std::int64_t>(miny, v.y);
      maxy = std::max<std::int64_t>(maxy, v.y);
    }
    const std::int64_t cx = (minx + maxx) / 2;
    const std::int64_t cy = (miny + maxy) / 2;
    pts_.reserve(input.size() + 3);
    for (const auto& v : input) pts_.push_back({v.x - cx, v.y - cy, -1});
    for (int k = 0; k < 3; ++k) pts_.push_back({0, 0, k});

    Tri super{{n_, n_ + 1, n_ + 2}, {kNone, kNone, kNone}, true};
    if (detail::orient(pts_[static_cast<std::size_t>(n_)], pts_[static_cast<std::size_t>(n_ + 1)],
                       pts_[static_cast<std::size_t>(n_ + 2)]) < 0) {
      std::swap(super.v[1], super.v[2]);
    }
    tris_.push_back(super);
  }

  void insert(int p) {
    ++stamp_;
    const int start = locate(p);
    cavity_.clear();
    cavity_.push_back(start);
    mark(start, kInCavity);
    for (std::size_t k = 0; k < cavity_.size(); ++k) {
      const Tri& t = tris_[static_cast<std::size_t>(cavity_[k])];
      for (int nb : t.nbr) {
        if (nb == kNone || marked(nb)) continue;
        const Tri& u = tris_[static_cast<std::size_t>(nb)];
        if (detail::incircle(pt(u.v[0]), pt(u.v[1]), pt(u.v[2]), pt(p)) > 0) {
          mark(nb, kInCavity);
          cavity_.push_back(nb);
        } else {
          mark(nb, kOutside);
        }
      }
    }

    // Fan the cavity boundary to p.
    fan_.clear();
    for (int ci : cavity_) {
      const Tri t = tris_[static_cast<std::size_t>(ci)];
      for (int i = 0; i < 3; ++i) {
        const int outside = t.nbr[static_cast<std::size_t>(i)];
        if (outside != kNone && in_cavity(outside)) continue;
        const int a = t.v[static_cast<std::size_t>((i + 1) % 3)];
        const int b = t.v[static_cast<std::size_t>((i + 2) % 3)];
        const int id = static_cast<int>(tris_.size());
        tris_.push_back({{a, b, p}, {kNone, kNone, outside}, true});
        if (outside != kNone) replace_neighbor(outside, ci, id);
        fan_.push_back({a, b, id});
      }
    }
    for (const auto& f : fan_) {
      Tri& t = tris_[static_cast<std::size_t>(f.tri)];
      for (const auto& g : fan_) {
        if (g.a == f.b) t.nbr[0] = g.tri;  // edge b-p
        if (g.b == f.a) t.nbr[1] = g.tri;  // edge p-a
      }
    }
    for (int ci : cavity_) tris_[static_cast<std::size_t>(ci)].alive = false;
    last_ = fan_.back().tri;
    marks_.resize(tris_.size(), 0);
    kinds_.resize(tris_.size(), 0);
  }

  // Flips exactly cocircular interior edges toward the lexicographically
  // smaller sorted diagonal until none remains. Each flip strictly decreases
  // the sorted edge multiset, so this terminates.
  void resolve_cocircular() {
    std::vector<std::pair<int, int>> work;
    for (int t = 0; t < static_cast<int>(tris_.size()); ++t)
      if (is_real(t))
        for (int i = 0; i < 3; ++i) work.emplace_back(t, i);
    std::reverse(work.begin(), work.end());
    while (!work.empty()) {
      const auto [t, i] = work.back();
      work.pop_back();
      if (!is_real(t)) continue;
      const int u = tris_[static_cast<std::size_t>(t)].nbr[static_cast<std::size_t>(i)];
      if (u == kNone || !is_real(u)) continue;
      if (!should_flip(t, i, u)) continue;
      flip(t, i, u);
      for (int k = 0; k < 3; ++k) {
        work.emplace_back(t, k);
        work.emplace_back(u, k);
      }
    }
  }

  std::vector<Triangle> real_triangles() const {
    std::vector<Triangle> out;
    for (int t = 0; t < static_cast<int>(tris_.size()); ++t) {
      if (!is_real(t)) continue;
      auto v = tris_[static_cast<std::size_t>(t)].v;
      std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
      out.push_back({v[0], v[1], v[2]});
    }
    std::sort(out.begin(), out.end(), [](const Triangle& x, const Triangle& y) { return x.sorted() < y.sorted(); });
    return out;
  }

 private:
  static constexpr std::uint8_t kInCavity = 1;
  static constexpr std::uint8_t kOutside = 2;

  struct FanEdge {
    int a;
    int b;
    int tri;
  };

  const detail::SymPoint& pt(int i) const { return pts_[static_cast<std::size_t>(i)]; }

  bool is_real(int t) const {
    const Tri& tri = tris_[static_cast<std::size_t>(t)];
    return tri.alive && tri.v[0] < n_ && tri.v[1] < n_ && tri.v[2] < n_;
  }

  void mark(int t, std::uint8_t kind) {
    if (marks_.size() < tris_.size()) {
      marks_.resize(tris_.size(), 0);
      kinds_.resize(tris_.size(), 0);
    }
    marks_[static_cast<std::size_t>(t)] = stamp_;
    kinds_[static_cast<std::size_t>(t)] = kind;
  }
  bool marked(int t) const {
    return static_cast<std::size_t>(t) < marks_.size() && marks_[static_cast<std::size_t>(t)] == stamp_;
  }
  bool in_cavity(int t) const { return marked(t) && kinds_[static_cast<std::size_t>(t)] == kInCavity; }

  void replace_neighbor(int t, int from, int to) {
    for (int& nb : tris_[static_cast<std::size_t>(t)].nbr)
      if (nb == from) {
        nb = to;
        return;
      }
  }

  // Visibility walk from the most recent triangle. Terminates on Delaunay
  // triangulations; the linear scan is a safety net.
  int locate(int p) const {
    int t = last_;
    const std::size_t max_steps = 4 * tris_.size() + 16;
    for (std::size_t step = 0; step < max_steps; ++step) {
      const Tri& tri = tris_[static_cast<std::size_t>(t)];
      int next = kNone;
      for (int i = 0; i < 3; ++i) {
        const int a = tri.v[static_cast<std::size_t>((i + 1) % 3)];
        const int b = tri.v[static_cast<std::size_t>((i + 2) % 3)];
        if (detail::orient(pt(a), pt(b), pt(p)) < 0) {
          next = tri.nbr[static_cast<std::size_t>(i)];
          break;
        }
      }
      if (next == kNone) return t;
      t = next;
    }
    for (int s = 0; s < static_cast<int>(tris_.size()); ++s) {
      const Tri& tri = tris_[static_cast<std::size_t>(s)];
      if (!tri.alive) continue;
      bool inside = true;
      for (int i = 0; i < 3 && inside; ++i)
        inside = detail::orient(pt(tri.v[static_cast<std::size_t>((i + 1) % 3)]),
                                pt(tri.v[static_cast<std::size_t>((i + 2) % 3)]), pt(p)) >= 0;
      if (inside) return s;
    }
    throw Error(ErrorKind::Degenerate, "point location failed");
  }

  static int index_of(const Tri& t, int nb) {
    for (int k = 0; k < 3; ++k)
      if (t.nbr[static_cast<std::size_t>(k)] == nb) return k;
    return kNone;
  }

  static std::pair<int, int> sorted_pair(int x, int y) { return x < y ? std::pair{x, y} : std::pair{y, x}; }

  bool should_flip(int t, int i, int u) const {
    const Tri& tt = tris_[static_cast<std::size_t>(t)];
    const Tri& uu = tris_[static_cast<std::size_t>(u)];
    const int a = tt.v[static_cast<std::size_t>(i)];
    const int b = tt.v[static_cast<std::size_t>((i + 1) % 3)];
    const int c = tt.v[static_cast<std::size_t>((i + 2) % 3)];
    const int d = uu.v[static_cast<std::size_t>(index_of(uu, t))];
    if (sorted_pair(a, d) >= sorted_pair(b, c)) return false;
    return detail::incircle(pt(a), pt(b), pt(c), pt(d)) == 0;
  }

  // t = (a, b, c) with edge b-c opposite a; u = (d, c, b). Afterwards
  // t = (a, b, d) and u = (a, d, c).
  void flip(int t, int i, int u) {
    Tri& tt = tris_[static_cast<std::size_t>(t)];
    Tri& uu = tris_[static_cast<std::size_t>(u)];
    const int j = index_of(uu, t);
    const int a = tt.v[static_cast<std::size_t>(i)];
    const int b = tt.v[static_cast<std::size_t>((i + 1) % 3)];
    const int c = tt.v[static_cast<std::size_t>((i + 2) % 3)];
    const int d = uu.v[static_cast<std::size_t>(j)];
    const int n_ca = tt.nbr[static_cast<std::size_t>((i + 1) % 3)];
    const int n_ab = tt.nbr[static_cast<std::size_t>((i + 2) % 3)];
    const int n_bd = uu.nbr[static_cast<std::size_t>((j + 1) % 3)];
    const int n_dc = uu.nbr[static_cast<std::size_t>((j + 2) % 3)];
    tt.v = {a, b, d};
    tt.nbr = {n_bd, u, n_ab};
    uu.v = {a, d, c};
    uu.nbr = {n_dc, n_ca, t};
    if (n_bd != kNone) replace_neighbor(n_bd, u, t);
    if (n_ca != kNone) replace_neighbor(n_ca, t, u);
  }

  int n_;
  std::vector<detail::SymPoint> pts_;
  std::vector<Tri> tris_;
  int last_ = 0;
  std::uint32_t stamp_ = 0;
  std::vector<std::uint32_t> marks_;
  std::vector<std::uint8_t> kinds_;
  std::vector<int> cavity_;
  std::vector<FanEdge> fan_;
};

void validate_input(std::span<const Vertex> points) {
  if (points.size() < 3) {
    throw Error(ErrorKind::Degenerate, "too few points to triangulate: " + std::to_string(points.size()) +
                                           " (need 3)");
  }
  for (const auto& v : points) {
    if (v.x < -kMaxCoordinate || v.x > kMaxCoordinate || v.y < -kMaxCoordinate || v.y > kMaxCoordinate) {
      throw Error(ErrorKind::Parameter, "vertex (" + std::to_string(v.x) + ", " + std::to_string(v.y) +
                                            ") exceeds the coordinate limit");
    }
  }
  std::vector<std::pair<int, int>> keys;
  keys.reserve(points.size());
  for (const auto& v : points) keys.emplace_back(v.y, v.x);
  std::sort(keys.begin(), keys.end());
  if (auto dup = std::adjacent_find(keys.begin(), keys.end()); dup != keys.end()) {
    throw Error(ErrorKind::Degenerate, "duplicate vertex (" + std::to_string(dup->second) + ", " +
                                           std::to_string(dup->first) + ")");
  }
  const Vertex p0 = points[0];
  const Vertex p1 = points[1];
  const bool collinear = std::all_of(points.begin() + 2, points.end(), [&](Vertex q) { return orient2d(p0, p1, q) == 0; });
  if (collinear) throw Error(ErrorKind::Degenerate, "all " + std::to_string(points.size()) + " points are collinear");
}

}  // namespace

Triangulation triangulate(std::span<const Vertex> points) {
  validate_input(points);
  std::vector<int> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    const Vertex a = points[static_cast<std::size_t>(i)];
    const Vertex b = points[static_cast<std::size_t>(j)];
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  });

  BowyerWatson bw(points);
  for (int i : order) bw.insert(i);
  bw.resolve_cocircular();

  Triangulation out;
  out.vertices.assign(points.begin(), points.end());
  out.triangles = bw.real_triangles();
  return out;
}

Triangulation triangulate(const PointSet& ps) {
  std::vector<Vertex> verts;
  verts.reserve(ps.size());
  for (const auto& p : ps.points) verts.push_back({p.x, p.y});
  return triangulate(verts);
}

PixelCoord centroid(const Triangle& tri, std::span<const Vertex> verts) {
  const Vertex& a = verts[static_cast<std::size_t>(tri.a)];
  const Vertex& b = verts[static_cast<std::size_t>(tri.b)];
  const Vertex& c = verts[static_cast<std::size_t>(tri.c)];
  return {round_third(static_cast<long>(a.x) + b.x + c.x), round_third(static_cast<long>(a.y) + b.y + c.y)};
}

PixelCoord centroid(const Triangle& tri, std::span<const Vertex> verts, int width, int height) {
  const PixelCoord p = centroid(tri, verts);
  return {std::clamp(p.x, 0, width - 1), std::clamp(p.y, 0, height - 1)};
}

}  // namespace lowpoly

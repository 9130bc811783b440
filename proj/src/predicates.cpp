#include "predicates.hpp"

#include <array>
#include <numeric>

namespace lowpoly::detail {

namespace {

struct Dir {
  std::int64_t x;
  std::int64_t y;
};

// Components have gcd 1 and magnitude > 2^21, so no integer vector with
// components bounded by 2^21 can be parallel to them. The triangle they span
// contains the origin.
constexpr std::array<Dir, 3> kSuperDirections{{
    {-4194319, -4194301},
    {4194329, -4194287},
    {7, 8388617},
}};

static_assert(std::gcd(4194319, 4194301) == 1);
static_assert(std::gcd(4194329, 4194287) == 1);
static_assert(std::gcd(7, 8388617) == 1);

// Polynomial in M with degree <= 4.
struct Poly {
  std::array<i128, 5> c{};

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    for (std::size_t i = 0; i < 5; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    for (std::size_t i = 0; i < 5; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (std::size_t i = 0; i < 5; ++i) {
      if (a.c[i] == 0) continue;
      for (std::size_t j = 0; i + j < 5; ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
  }
  int sign() const {
    for (std::size_t i = 5; i-- > 0;) {
      if (c[i] > 0) return 1;
      if (c[i] < 0) return -1;
    }
    return 0;
  }
};

Poly coord_x(const SymPoint& p) {
  Poly r;
  if (p.super >= 0) {
    r.c[1] = kSuperDirections[static_cast<std::size_t>(p.super)].x;
  } else {
    r.c[0] = p.x;
  }
  return r;
}

Poly coord_y(const SymPoint& p) {
  Poly r;
  if (p.super >= 0) {
    r.c[1] = kSuperDirections[static_cast<std::size_t>(p.super)].y;
  } else {
    r.c[0] = p.y;
  }
  return r;
}

int sign_of(i128 v) { return (v > 0) - (v < 0); }

}  // namespace

int orient_exact(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by, std::int64_t cx,
                 std::int64_t cy) {
  const i128 det = static_cast<i128>(bx - ax) * (cy - ay) - static_cast<i128>(by - ay) * (cx - ax);
  return sign_of(det);
}

int incircle_exact(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by, std::int64_t cx,
                   std::int64_t cy, std::int64_t dx, std::int64_t dy) {
  const i128 adx = ax - dx, ady = ay - dy;
  const i128 bdx = bx - dx, bdy = by - dy;
  const i128 cdx = cx - dx, cdy = cy - dy;
  const i128 alift = adx * adx + ady * ady;
  const i128 blift = bdx * bdx + bdy * bdy;
  const i128 clift = cdx * cdx + cdy * cdy;
  const i128 det = alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) + clift * (adx * bdy - bdx * ady);
  return sign_of(det);
}

int orient(const SymPoint& a, const SymPoint& b, const SymPoint& c) {
  if (a.super < 0 && b.super < 0 && c.super < 0) return orient_exact(a.x, a.y, b.x, b.y, c.x, c.y);
  const Poly ax = coord_x(a), ay = coord_y(a);
  const Poly det = (coord_x(b) - ax) * (coord_y(c) - ay) - (coord_y(b) - ay) * (coord_x(c) - ax);
  return det.sign();
}

int incircle(const SymPoint& a, const SymPoint& b, const SymPoint& c, const SymPoint& d) {
  if (a.super < 0 && b.super < 0 && c.super < 0 && d.super < 0) {
    return incircle_exact(a.x, a.y, b.x, b.y, c.x, c.y, d.x, d.y);
  }
  const Poly dx = coord_x(d), dy = coord_y(d);
  const Poly adx = coord_x(a) - dx, ady = coord_y(a) - dy;
  const Poly bdx = coord_x(b) - dx, bdy = coord_y(b) - dy;
  const Poly cdx = coord_x(c) - dx, cdy = coord_y(c) - dy;
  const Poly alift = adx * adx + ady * ady;
  const Poly blift = bdx * bdx + bdy * bdy;
  const Poly clift = cdx * cdx + cdy * cdy;
  const Poly det = alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) + clift * (adx * bdy - bdx * ady);
  return det.sign();
}

}  // namespace lowpoly::detail

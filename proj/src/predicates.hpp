#pragma once

#include <cstdint>

namespace lowpoly::detail {

using i128 = __int128;

// A point with integer coordinates, or (super >= 0) a super-triangle vertex
// at M * direction[super] for a symbolic M larger than any finite bound.
// Predicates involving super vertices are evaluated as polynomials in M and
// take the sign of the leading nonzero coefficient, which is the sign the
// predicate has for every sufficiently large concrete M.
struct SymPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  int super = -1;
};

// Finite coordinates handed to these predicates must satisfy |x|, |y| <= 2^21
// so that no difference vector is parallel to a super direction and every
// coefficient fits in 128 bits.
inline constexpr std::int64_t kSymbolicCoordLimit = std::int64_t{1} << 21;

int orient(const SymPoint& a, const SymPoint& b, const SymPoint& c);

// > 0 iff d lies strictly inside the circle through a, b, c, where (a, b, c)
// has positive orientation.
int incircle(const SymPoint& a, const SymPoint& b, const SymPoint& c, const SymPoint& d);

// Exact predicates on finite integer points (no super vertices).
int orient_exact(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by, std::int64_t cx, std::int64_t cy);
int incircle_exact(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by, std::int64_t cx,
                   std::int64_t cy, std::int64_t dx, std::int64_t dy);

}  // namespace lowpoly::detail

#include "polysum/polygonal.hpp"

#include <algorithm>
#include <string>

#include "polysum/errors.hpp"

namespace polysum {

namespace {

// Smallest |x| first, nonnegative first on ties.
bool index_precedes(Int a, Int b) {
  Int abs_a = a < 0 ? arith::sub(0, a) : a;
  Int abs_b = b < 0 ? arith::sub(0, b) : b;
  if (abs_a != abs_b) return abs_a < abs_b;
  return a > b;
}

}  // namespace

PolygonalKind::PolygonalKind(Int order) : m_(order) {
  if (order < 3) {
    throw PreconditionError("polygonal order must be at least 3, got " + std::to_string(order));
  }
}

Int eval(PolygonalKind kind, GeneralizedIndex x) {
  // x(x-1) is always even, so the halving is exact.
  Int pronic = arith::mul(x, arith::sub(x, 1));
  return arith::add(arith::mul(kind.order() - 2, pronic / 2), x);
}

std::optional<GeneralizedIndex> is_generalized(PolygonalKind kind, Int n) {
  if (n < 0) throw PreconditionError("is_generalized expects n >= 0");
  // p_m(k) and p_m(-k) are both nondecreasing in k >= 0.
  for (Int k = 0;; ++k) {
    Int up = eval(kind, k);
    Int down = eval(kind, -k);
    if (up == n) return k;
    if (down == n) return -k;
    if (up > n && down > n) return std::nullopt;
  }
}

std::vector<Int> values_up_to(PolygonalKind kind, Int bound, IndexRange range) {
  if (bound < 0) throw PreconditionError("values_up_to expects bound >= 0");
  std::vector<Int> out;
  for (Int k = 0;; ++k) {
    Int up = eval(kind, k);
    Int down = range == IndexRange::integers ? eval(kind, -k) : bound + 1;
    if (up > bound && down > bound) break;
    if (up <= bound) out.push_back(up);
    if (down <= bound) out.push_back(down);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SquareCompletion square_completion(PolygonalKind kind) {
  Int m = kind.order();
  return {8 * (m - 2), arith::square(m - 4), 2 * (m - 2), m - 4};
}

Int encode_index(PolygonalKind kind, GeneralizedIndex x) {
  auto sc = square_completion(kind);
  return arith::sub(arith::mul(sc.slope, x), sc.offset);
}

std::optional<GeneralizedIndex> decode_coordinate(PolygonalKind kind, Int t) {
  auto sc = square_completion(kind);
  std::optional<Int> best;
  for (Int signed_t : {t, arith::sub(0, t)}) {
    Int shifted = arith::add(signed_t, sc.offset);
    if (arith::mod(shifted, sc.slope) != 0) continue;
    Int x = shifted / sc.slope;
    if (!best || index_precedes(x, *best)) best = x;
  }
  return best;
}

}  // namespace polysum

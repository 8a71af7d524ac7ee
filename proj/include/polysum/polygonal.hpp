#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "polysum/arith.hpp"

namespace polysum {

/// Order m >= 3 of a family of generalized polygonal numbers
/// p_m(x) = (m-2) x (x-1) / 2 + x, x ranging over all integers.
class PolygonalKind {
 public:
  /// Throws PreconditionError when order < 3.
  explicit PolygonalKind(Int order);

  Int order() const noexcept { return m_; }

  auto operator<=>(const PolygonalKind&) const = default;

 private:
  Int m_;
};

/// Signed index x of a generalized polygonal number.
using GeneralizedIndex = Int;

/// Which indices a scan may use.
enum class IndexRange { integers, naturals };

/// p_m(x). Nonnegative for every integer x; throws std::overflow_error when the
/// value does not fit in Int.
Int eval(PolygonalKind kind, GeneralizedIndex x);

/// Index x with p_m(x) == n, or nullopt. The witness returned has the smallest
/// |x|, nonnegative on ties. Throws PreconditionError for n < 0.
std::optional<GeneralizedIndex> is_generalized(PolygonalKind kind, Int n);

/// Sorted, duplicate-free { p_m(x) : x in range } intersected with [0, bound].
std::vector<Int> values_up_to(PolygonalKind kind, Int bound,
                              IndexRange range = IndexRange::integers);

/// Completing the square:  scale * p_m(x) + shift == (slope * x - offset)^2
/// with scale = 8(m-2), shift = (m-4)^2, slope = 2(m-2), offset = m-4.
struct SquareCompletion {
  Int scale;
  Int shift;
  Int slope;
  Int offset;

  bool operator==(const SquareCompletion&) const = default;
};

SquareCompletion square_completion(PolygonalKind kind);

/// slope * x - offset.
Int encode_index(PolygonalKind kind, GeneralizedIndex x);

/// Inverse of encode_index up to sign: an x with encode_index(x) == t or
/// encode_index(x) == -t. Among the (at most two) candidates the one with the
/// smallest |x| wins, nonnegative on ties.
std::optional<GeneralizedIndex> decode_coordinate(PolygonalKind kind, Int t);

}  // namespace polysum

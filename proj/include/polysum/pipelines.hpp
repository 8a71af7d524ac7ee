#pragma once

#include <array>

#include "polysum/certify.hpp"
#include "polysum/sum_form.hpp"

namespace polysum {

/// scale * p_m(x) + shift == (slope*x - offset)^2.
inline SquareCompletion square_complete(Int m) { return square_completion(PolygonalKind(m)); }

/// multiplier*n + constant == form(t) for a three-term sum; every coordinate is
/// constrained to the class that decodes to an index of its term.
ReductionTarget reduce(const SumForm& sum);

/// 24n + b + c + 1 == x^2 + b y^2 + c z^2 with x, y, z prime to 6.
ReductionTarget reduce_pentagonal(Int b, Int c);

struct Witness {
  std::array<Int, 3> indices;
  Certificate certificate;
};

/// p_5 + b p_5 + c p_5 for (b, c) in {(1,3), (2,3), (2,6), (3,3), (3,4), (3,9)}.
/// Throws PreconditionError for other pairs or n < 0, PipelineFailure if a
/// step of the chain fails.
Witness witness_pentagonal(Int b, Int c, Int n);

/// p_3 + p_5 + p_11.
Witness witness_p3_p5_p11(Int n);

/// 3 p_3 + p_5 + p_7.
Witness witness_3p3_p5_p7(Int n);

/// True for the eight sums above, written in that term order, over Z.
bool has_pipeline(const SumForm& sum);

/// Dispatches to the matching pipeline; PreconditionError if none.
Witness witness(const SumForm& sum, Int n);

}  // namespace polysum

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polysum/sum_form.hpp"

namespace polysum {

enum class WitnessSource { brute_force, pipeline };

struct ScanReport {
  SumForm sum;
  Int bound;
  std::optional<Int> first_failure;  // least unrepresented n <= bound
  WitnessSource source;

  bool no_failure() const noexcept { return !first_failure.has_value(); }
};

/// Decides representability of every n <= bound by exact table search over the
/// sum's domain. `jobs` splits the range; the report does not depend on it.
ScanReport check_range(const SumForm& sum, Int bound, unsigned jobs = 1);

/// Like check_range but each n is witnessed by the constructive chain and the
/// witness re-evaluated. Requires has_pipeline(sum). A chain failure at n is
/// reported as first_failure = n.
ScanReport check_range_pipeline(const SumForm& sum, Int bound, unsigned jobs = 1);

/// Least n <= bound with no representation.
std::optional<Int> find_counterexample(const SumForm& sum, Int bound, unsigned jobs = 1);

/// Pairs b <= c, b <= b_max, c <= c_max, for which p5 + b p5 + c p5 has no
/// counterexample up to bound.
std::vector<std::pair<Int, Int>> surviving_pairs(Int b_max, Int c_max, Int bound,
                                                 unsigned jobs = 1);

/// The fourteen pairs (b, c) for which p5 + b p5 + c p5 is conjectured to be
/// universal over Z. Six of them have constructive chains (see pipelines.hpp).
const std::vector<std::pair<Int, Int>>& open_pairs();

/// check_range over each open pair, in open_pairs() order.
std::vector<ScanReport> check_open_pairs(Int bound, unsigned jobs = 1);

}  // namespace polysum

#include "polysum/universality.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "polysum/errors.hpp"
#include "polysum/pipelines.hpp"

namespace polysum {

namespace {

// Runs scan(lo, hi) over [0, bound] split into `jobs` contiguous chunks and
// returns the least failure over all chunks.
std::optional<Int> least_failure(Int bound, unsigned jobs,
                                 const std::function<std::optional<Int>(Int, Int)>& scan) {
  jobs = std::max(1u, jobs);
  const Int total = bound + 1;
  const Int chunk = (total + jobs - 1) / jobs;
  std::vector<std::optional<Int>> results(jobs);
  std::vector<std::thread> workers;
  for (unsigned k = 0; k < jobs; ++k) {
    const Int lo = k * chunk;
    const Int hi = std::min(bound, lo + chunk - 1);
    if (lo > hi) break;
    if (jobs == 1) {
      results[k] = scan(lo, hi);
    } else {
      workers.emplace_back([&, k, lo, hi] { results[k] = scan(lo, hi); });
    }
  }
  for (auto& w : workers) w.join();
  for (const auto& r : results) {
    if (r) return r;
  }
  return std::nullopt;
}

std::vector<Int> scaled_values(const SumTerm& term, Int bound, Domain domain) {
  const auto range = domain == Domain::integers ? IndexRange::integers : IndexRange::naturals;
  std::vector<Int> out;
  for (Int v : values_up_to(term.kind, bound / term.coef, range)) out.push_back(v * term.coef);
  return out;
}

}  // namespace

ScanReport check_range(const SumForm& sum, Int bound, unsigned jobs) {
  if (bound < 0) throw PreconditionError("check_range expects bound >= 0");
  const auto& terms = sum.terms();
  // reach[v]: v is a sum of one value from each of the leading terms.
  std::vector<char> reach(static_cast<std::size_t>(bound) + 1, 0);
  reach[0] = 1;
  for (std::size_t t = 0; t + 1 < terms.size(); ++t) {
    std::vector<char> next(reach.size(), 0);
    const auto vals = scaled_values(terms[t], bound, sum.domain());
    for (Int base = 0; base <= bound; ++base) {
      if (!reach[base]) continue;
      for (Int v : vals) {
        if (base + v > bound) break;
        next[base + v] = 1;
      }
    }
    reach.swap(next);
  }
  const auto last = scaled_values(terms.back(), bound, sum.domain());
  auto scan = [&](Int lo, Int hi) -> std::optional<Int> {
    for (Int n = lo; n <= hi; ++n) {
      bool found = false;
      for (Int v : last) {
        if (v > n) break;
        if (reach[n - v]) {
          found = true;
          break;
        }
      }
      if (!found) return n;
    }
    return std::nullopt;
  };
  return {sum, bound, least_failure(bound, jobs, scan), WitnessSource::brute_force};
}

ScanReport check_range_pipeline(const SumForm& sum, Int bound, unsigned jobs) {
  if (bound < 0) throw PreconditionError("check_range_pipeline expects bound >= 0");
  if (!has_pipeline(sum)) throw PreconditionError("no constructive chain for " + sum.to_string());
  auto scan = [&](Int lo, Int hi) -> std::optional<Int> {
    for (Int n = lo; n <= hi; ++n) {
      try {
        auto w = witness(sum, n);
        if (sum.evaluate(w.indices) != n) return n;
      } catch (const PipelineFailure&) {
        return n;
      }
    }
    return std::nullopt;
  };
  return {sum, bound, least_failure(bound, jobs, scan), WitnessSource::pipeline};
}

std::optional<Int> find_counterexample(const SumForm& sum, Int bound, unsigned jobs) {
  return check_range(sum, bound, jobs).first_failure;
}

std::vector<std::pair<Int, Int>> surviving_pairs(Int b_max, Int c_max, Int bound,
                                                 unsigned jobs) {
  if (b_max < 1 || c_max < 1) throw PreconditionError("pair bounds must be positive");
  std::vector<std::pair<Int, Int>> out;
  for (Int b = 1; b <= b_max; ++b) {
    for (Int c = b; c <= c_max; ++c) {
      if (!find_counterexample(pentagonal_sum(b, c), bound, jobs)) out.emplace_back(b, c);
    }
  }
  return out;
}

const std::vector<std::pair<Int, Int>>& open_pairs() {
  static const std::vector<std::pair<Int, Int>> pairs{
      {1, 3}, {1, 6}, {1, 8}, {1, 9}, {1, 10}, {2, 3}, {2, 6},
      {2, 8}, {3, 3}, {3, 4}, {3, 6}, {3, 7}, {3, 8}, {3, 9}};
  return pairs;
}

std::vector<ScanReport> check_open_pairs(Int bound, unsigned jobs) {
  std::vector<ScanReport> out;
  for (auto [b, c] : open_pairs()) out.push_back(check_range(pentagonal_sum(b, c), bound, jobs));
  return out;
}

}  // namespace polysum

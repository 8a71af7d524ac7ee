#pragma once

// Constants frozen from tests/oracle/compute_golden.py (independent brute force).

#include <map>
#include <utility>
#include <vector>

#include "polysum/arith.hpp"

namespace golden {

using polysum::Int;
using Pair = std::pair<Int, Int>;

// The twenty (b, c), b <= c <= 10, for which p5 + b p5 + c p5 may be universal.
inline const std::vector<Pair> kSurvivors = {
    {1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 8}, {1, 9}, {1, 10}, {2, 2},
    {2, 3}, {2, 4}, {2, 6}, {2, 8}, {3, 3}, {3, 4}, {3, 6}, {3, 7}, {3, 8}, {3, 9}};

// Least counterexample of p5 + b p5 + c p5 over Z for every other pair with
// b <= c <= 10; all are found below the bound 10^4.
inline std::map<Pair, Int> counterexamples() {
  std::map<Pair, Int> m = {{{1, 7}, 25}, {{2, 5}, 18}, {{2, 7}, 27}, {{2, 9}, 8},
                           {{2, 10}, 8}, {{3, 5}, 19}, {{3, 10}, 9}};
  for (Int b = 4; b <= 10; ++b)
    for (Int c = b; c <= 10; ++c) m[{b, c}] = 3;
  return m;
}

// Sums already known universal over Z.
inline const std::vector<const char*> kKnownUniversal = {
    "p5+p5+p5", "p5+p5+2p5", "p5+p5+4p5", "p5+2p5+2p5", "p5+2p5+4p5", "p5+p5+5p5"};

// Spot counterexamples for excluded triples with a > 1 or another order.
inline const std::vector<std::pair<const char*, Int>> kSpotFailures = {
    {"p4+p4+p4", 7}, {"p7+p7+p7", 10}, {"p8+p8+p8", 4}, {"2p5+2p5+2p5", 1}, {"p5+p5+7p5", 25}};

}  // namespace golden

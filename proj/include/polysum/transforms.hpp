#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "polysum/arith.hpp"

namespace polysum {

using Pair = std::array<Int, 2>;

// ---------------------------------------------------------------------------
// Value-preserving rewrites of binary and ternary diagonal representations.
// Each throws PreconditionError when called outside its domain.
// ---------------------------------------------------------------------------

/// x^2 + 3y^2 == u^2 + 3v^2 with u = (x + 3sy)/2, v = (x - sy)/2.
/// Requires sign in {+1, -1} and x == sign*y (mod 2).
Pair rotate_x2_3y2(Int x, Int y, Int sign);

/// Rewrites x^2 + 3y^2 == 4 (mod 8) with both coordinates odd. Inputs that are
/// already odd come back unchanged.
Pair make_odd_x2_3y2(Int x, Int y);

/// For odd x, y with 3 not dividing x: u, v coprime to 6 with
/// u^2 + 3v^2 == x^2 + 3y^2. When 3 divides y, rotates with the first sign
/// (+ then -) making x and sign*y differ mod 4.
Pair make_coprime6_x2_3y2(Int x, Int y);

/// 3(x^2 + y^2 + z^2) == u^2 + 2v^2 + 6w^2 for
/// u = x + y + z, v = (x + y - 2z)/2, w = (x - y)/2. Requires x == y (mod 2).
std::array<Int, 3> jacobi_split(Int x, Int y, Int z);

/// Canonical (a, b), both prime to 3, with a^2 + 2b^2 == u^2 + 2v^2.
/// Requires u^2 + 2v^2 > 0 and divisible by 3.
Pair make_coprime3_x2_2y2(Int u, Int v);

/// For odd a, b with 5 | a^2 + b^2: picks a' in {a, -a} with a' == 2b (mod 5)
/// and returns x = (2a' + b)/5, y = (a' - 2b)/5, so a^2 + b^2 == 5(x^2 + y^2).
Pair five_split(Int a, Int b);

// ---------------------------------------------------------------------------
// Recorded rewrite steps over a three-term weighted state.
// ---------------------------------------------------------------------------

enum class Rule {
  rotate_x2_3y2,       // param: sign
  odd_x2_3y2,
  coprime6_x2_3y2,
  jacobi_split,
  coprime3_x2_2y2,
  five_split,
  rescale,             // param: factor d >= 2
};

std::string_view rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);

/// One coefficient * coordinate^2 summand.
struct Term {
  Int coef;
  Int coord;

  bool operator==(const Term&) const = default;
};

using State = std::array<Term, 3>;

Int state_value(const State& s);

struct RewriteStep {
  Rule rule;
  Int param = 0;
  std::vector<int> positions;
  std::vector<Int> inputs;
  std::vector<Int> outputs;
  Int value = 0;  // state value after the step

  bool operator==(const RewriteStep&) const = default;
};

/// Replays a recorded step: checks the coefficient layout, the parameter,
/// that `inputs` match the current coordinates, recomputes the outputs and
/// compares them and the new value with the record. On success the state is
/// updated. Throws PreconditionError describing the first mismatch.
void replay(State& state, const RewriteStep& step);

/// Computes a step from the current state, applies it and returns the record.
RewriteStep perform(State& state, Rule rule, Int param, std::vector<int> positions);

}  // namespace polysum

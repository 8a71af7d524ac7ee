#include "polysum/transforms.hpp"

#include <algorithm>
#include <string>

#include "polysum/errors.hpp"

namespace polysum {

namespace {

bool odd(Int t) { return t % 2 != 0; }

std::string pair_str(Int a, Int b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

Pair rotate_x2_3y2(Int x, Int y, Int sign) {
  if (sign != 1 && sign != -1) throw PreconditionError("rotation sign must be +1 or -1");
  const Int sy = arith::mul(sign, y);
  if (arith::mod(arith::sub(x, sy), 2) != 0) {
    throw PreconditionError("rotation needs x == sign*y (mod 2), got " + pair_str(x, y));
  }
  return {arith::add(x, arith::mul(3, sy)) / 2, arith::sub(x, sy) / 2};
}

Pair make_odd_x2_3y2(Int x, Int y) {
  const Int w = arith::add(arith::square(x), arith::mul(3, arith::square(y)));
  if (arith::mod(w, 8) != 4) {
    throw PreconditionError("x^2 + 3y^2 must be 4 mod 8, got " + std::to_string(w));
  }
  if (odd(x) && odd(y)) return {x, y};
  // Here x, y are both even with halves of opposite parity, so either sign
  // lands on an odd pair.
  for (Int sign : {1, -1}) {
    auto r = rotate_x2_3y2(x, y, sign);
    if (odd(r[0]) && odd(r[1])) return r;
  }
  for (Int v = 1; 3 * v * v <= w; v += 2) {
    Int u;
    if (arith::is_square(w - 3 * v * v, &u) && odd(u)) return {u, v};
  }
  throw SearchExhausted("no odd pair for x^2 + 3y^2 = " + std::to_string(w));
}

Pair make_coprime6_x2_3y2(Int x, Int y) {
  if (!odd(x) || !odd(y) || x % 3 == 0) {
    throw PreconditionError("coprime-to-6 rewrite needs x, y odd and 3 not dividing x, got " +
                            pair_str(x, y));
  }
  if (y % 3 != 0) return {x, y};
  for (Int sign : {1, -1}) {
    if (arith::mod(arith::sub(x, arith::mul(sign, y)), 4) != 0) {
      return rotate_x2_3y2(x, y, sign);
    }
  }
  // Unreachable: for odd x, y exactly one of x - y, x + y is 2 mod 4.
  throw SearchExhausted("no sign separates x and y mod 4");
}

std::array<Int, 3> jacobi_split(Int x, Int y, Int z) {
  if (arith::mod(arith::sub(x, y), 2) != 0) {
    throw PreconditionError("jacobi split needs x == y (mod 2)");
  }
  const Int sum_xy = arith::add(x, y);
  return {arith::add(sum_xy, z), arith::sub(sum_xy, arith::mul(2, z)) / 2,
          arith::sub(x, y) / 2};
}

Pair make_coprime3_x2_2y2(Int u, Int v) {
  const Int w = arith::add(arith::square(u), arith::mul(2, arith::square(v)));
  if (w <= 0 || w % 3 != 0) {
    throw PreconditionError("u^2 + 2v^2 must be a positive multiple of 3, got " +
                            std::to_string(w));
  }
  for (Int a = 1; a * a <= w; ++a) {
    if (a % 3 == 0) continue;
    const Int rest = w - a * a;
    if (rest % 2 != 0) continue;
    Int b;
    if (arith::is_square(rest / 2, &b) && b % 3 != 0) return {a, b};
  }
  throw SearchExhausted("no coprime-to-3 pair for a^2 + 2b^2 = " + std::to_string(w));
}

Pair five_split(Int a, Int b) {
  if (!odd(a) || !odd(b)) throw PreconditionError("five split needs odd a, b, got " + pair_str(a, b));
  const Int w = arith::add(arith::square(a), arith::square(b));
  if (w % 5 != 0) throw PreconditionError("five split needs 5 | a^2 + b^2, got " + std::to_string(w));
  const Int twice_b = arith::mul(2, b);
  for (Int sa : {a, arith::sub(0, a)}) {
    if (arith::mod(arith::sub(sa, twice_b), 5) == 0) {
      return {arith::add(arith::mul(2, sa), b) / 5, arith::sub(sa, twice_b) / 5};
    }
  }
  throw SearchExhausted("neither a nor -a is 2b mod 5");
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::array<std::pair<Rule, std::string_view>, 7> kRuleNames{{
    {Rule::rotate_x2_3y2, "rotate_x2_3y2"},
    {Rule::odd_x2_3y2, "odd_x2_3y2"},
    {Rule::coprime6_x2_3y2, "coprime6_x2_3y2"},
    {Rule::jacobi_split, "jacobi_split"},
    {Rule::coprime3_x2_2y2, "coprime3_x2_2y2"},
    {Rule::five_split, "five_split"},
    {Rule::rescale, "rescale"},
}};

[[noreturn]] void mismatch(const RewriteStep& step, const std::string& what) {
  throw PreconditionError(std::string(rule_name(step.rule)) + ": " + what);
}

std::size_t arity(Rule r) {
  switch (r) {
    case Rule::jacobi_split:
      return 3;
    case Rule::rescale:
      return 1;
    default:
      return 2;
  }
}

// Outputs and new coefficients for the rule applied at the given positions.
std::pair<std::vector<Int>, std::vector<Int>> evaluate(const State& state,
                                                       const RewriteStep& step) {
  const auto& pos = step.positions;
  if (pos.size() != arity(step.rule)) mismatch(step, "wrong number of positions");
  std::vector<Int> in, coef;
  for (int p : pos) {
    if (p < 0 || p > 2) mismatch(step, "position out of range");
    in.push_back(state[p].coord);
    coef.push_back(state[p].coef);
  }
  const bool has_param = step.rule == Rule::rotate_x2_3y2 || step.rule == Rule::rescale;
  if (!has_param && step.param != 0) mismatch(step, "rule takes no parameter");

  auto need_ratio = [&](Int ratio) {
    if (coef[1] != arith::mul(ratio, coef[0])) {
      mismatch(step, "coefficient at position " + std::to_string(pos[1]) + " must be " +
                         std::to_string(ratio) + " times the one at " + std::to_string(pos[0]));
    }
  };

  switch (step.rule) {
    case Rule::rotate_x2_3y2: {
      need_ratio(3);
      auto r = rotate_x2_3y2(in[0], in[1], step.param);
      return {{r[0], r[1]}, coef};
    }
    case Rule::odd_x2_3y2: {
      need_ratio(3);
      auto r = make_odd_x2_3y2(in[0], in[1]);
      return {{r[0], r[1]}, coef};
    }
    case Rule::coprime6_x2_3y2: {
      need_ratio(3);
      auto r = make_coprime6_x2_3y2(in[0], in[1]);
      return {{r[0], r[1]}, coef};
    }
    case Rule::coprime3_x2_2y2: {
      need_ratio(2);
      auto r = make_coprime3_x2_2y2(in[0], in[1]);
      return {{r[0], r[1]}, coef};
    }
    case Rule::five_split: {
      if (coef[0] != coef[1]) mismatch(step, "five split needs equal coefficients");
      auto r = five_split(in[0], in[1]);
      const Int k = arith::mul(5, coef[0]);
      return {{r[0], r[1]}, {k, k}};
    }
    case Rule::jacobi_split: {
      if (coef[0] != coef[1] || coef[1] != coef[2]) {
        mismatch(step, "jacobi split needs three equal coefficients");
      }
      auto r = jacobi_split(in[0], in[1], in[2]);
      const Int k = coef[0];
      return {{r[0], r[1], r[2]}, {k, arith::mul(2, k), arith::mul(6, k)}};
    }
    case Rule::rescale: {
      const Int d = step.param;
      if (d < 2) mismatch(step, "rescale factor must be at least 2");
      if (in[0] % d != 0) mismatch(step, "factor does not divide the coordinate");
      return {{in[0] / d}, {arith::mul(coef[0], arith::square(d))}};
    }
  }
  mismatch(step, "unknown rule");
}

}  // namespace

std::string_view rule_name(Rule r) {
  for (auto& [rule, name] : kRuleNames) {
    if (rule == r) return name;
  }
  return "?";
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (auto& [rule, n] : kRuleNames) {
    if (n == name) return rule;
  }
  return std::nullopt;
}

Int state_value(const State& s) {
  Int total = 0;
  for (const auto& t : s) total = arith::add(total, arith::mul(t.coef, arith::square(t.coord)));
  return total;
}

void replay(State& state, const RewriteStep& step) {
  const auto& pos = step.positions;
  if (pos.size() != arity(step.rule)) mismatch(step, "wrong number of positions");
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (pos[i] < 0 || pos[i] > 2) mismatch(step, "position out of range");
    for (std::size_t j = 0; j < i; ++j) {
      if (pos[i] == pos[j]) mismatch(step, "repeated position");
    }
  }
  if (step.inputs.size() != pos.size() || step.outputs.size() != pos.size()) {
    mismatch(step, "inputs/outputs length differs from positions");
  }
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (state[pos[i]].coord != step.inputs[i]) {
      mismatch(step, "recorded input " + std::to_string(step.inputs[i]) +
                         " differs from state coordinate " + std::to_string(state[pos[i]].coord));
    }
  }
  const Int before = state_value(state);
  auto [out, coef] = evaluate(state, step);
  if (out != step.outputs) mismatch(step, "replay produced different outputs");
  State next = state;
  for (std::size_t i = 0; i < pos.size(); ++i) next[pos[i]] = Term{coef[i], out[i]};
  const Int after = state_value(next);
  const Int expected = step.rule == Rule::jacobi_split ? arith::mul(3, before) : before;
  if (after != expected) mismatch(step, "value not preserved");
  if (after != step.value) {
    mismatch(step, "recorded value " + std::to_string(step.value) + " differs from " +
                       std::to_string(after));
  }
  state = next;
}

RewriteStep perform(State& state, Rule rule, Int param, std::vector<int> positions) {
  RewriteStep step{rule, param, std::move(positions), {}, {}, 0};
  for (int p : step.positions) {
    if (p < 0 || p > 2) mismatch(step, "position out of range");
    step.inputs.push_back(state[p].coord);
  }
  auto [out, coef] = evaluate(state, step);
  step.outputs = out;
  State next = state;
  for (std::size_t i = 0; i < step.positions.size(); ++i) {
    next[step.positions[i]] = Term{coef[i], out[i]};
  }
  step.value = state_value(next);
  replay(state, step);
  return step;
}

}  // namespace polysum

#include "polysum/pipelines.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>

#include "polysum/errors.hpp"

namespace polysum {

ReductionTarget reduce(const SumForm& sum) {
  const auto& terms = sum.terms();
  if (terms.size() != 3) throw PreconditionError("reduction needs a three-term sum");
  Int multiplier = 1;
  for (const auto& t : terms) multiplier = arith::lcm(multiplier, square_completion(t.kind).scale);
  std::array<Int, 3> coef{};
  Int constant = 0;
  CoordConstraint constraints = unconstrained();
  for (std::size_t i = 0; i < 3; ++i) {
    const auto sc = square_completion(terms[i].kind);
    coef[i] = arith::mul(terms[i].coef, multiplier / sc.scale);
    constant = arith::add(constant, arith::mul(coef[i], sc.shift));
    constraints[i] = coordinate_predicate(terms[i].kind);
  }
  return {multiplier, constant, DiagonalForm(coef[0], coef[1], coef[2]), constraints};
}

ReductionTarget reduce_pentagonal(Int b, Int c) { return reduce(pentagonal_sum(b, c)); }

namespace {

bool is_odd(Int t) { return t % 2 != 0; }

// Builds one certificate while a proof chain runs.
class Chain {
 public:
  Chain(SumForm sum, Int n, std::string label)
      : sum_(std::move(sum)), n_(n), reduction_(reduce(sum_)), label_(std::move(label)) {
    if (n < 0) throw PreconditionError("n must be nonnegative");
    target_ = arith::add(arith::mul(reduction_.multiplier, n), reduction_.constant);
  }

  Int target() const noexcept { return target_; }
  Int coord(int i) const { return state_[i].coord; }
  Int coef(int i) const { return state_[i].coef; }

  void start_direct(std::array<Int, 3> form, const CoordConstraint& cons = unconstrained()) {
    auto rep = represent(DiagonalForm(form[0], form[1], form[2]), target_, cons);
    if (!rep) fail("direct-search", "no representation of " + std::to_string(target_));
    start(SourceRule::direct_search, form, *rep);
  }

  void start(SourceRule source, std::array<Int, 3> form, const Representation& initial) {
    source_ = source;
    source_form_ = form;
    initial_ = initial;
    steps_.clear();
    for (std::size_t i = 0; i < 3; ++i) state_[i] = Term{form[i], initial[i]};
  }

  // Applies a rewrite; records it only when it changes the state.
  void step(Rule rule, std::vector<int> positions, Int param = 0) {
    const State before = state_;
    try {
      auto record = perform(state_, rule, param, std::move(positions));
      if (state_ != before) steps_.push_back(std::move(record));
    } catch (const PreconditionError& e) {
      fail(std::string(rule_name(rule)), e.what());
    } catch (const SearchExhausted& e) {
      fail(std::string(rule_name(rule)), e.what());
    }
  }

  // First position among `candidates` whose coordinate satisfies `pred`.
  template <typename Pred>
  int pick(std::initializer_list<int> candidates, Pred pred, const char* what) const {
    for (int p : candidates) {
      if (pred(state_[p].coord)) return p;
    }
    fail("choice", std::string("no coordinate is ") + what);
  }

  [[noreturn]] void fail(const std::string& step, const std::string& detail) const {
    throw PipelineFailure(label_ + "/" + step, detail);
  }

  Witness finish(bool fallback = false) const {
    std::array<int, 3> perm{0, 1, 2};
    do {
      bool ok = true;
      for (std::size_t i = 0; i < 3 && ok; ++i) {
        const auto& t = state_[perm[i]];
        ok = t.coef == reduction_.form.coefficient(i) && reduction_.constraints[i].accepts(t.coord);
      }
      if (ok) return build(perm, fallback);
    } while (std::next_permutation(perm.begin(), perm.end()));
    fail("finish", "final state does not match the target form and constraints");
  }

 private:
  Witness build(const std::array<int, 3>& perm, bool fallback) const {
    Representation final_rep{};
    std::array<Int, 3> indices{};
    for (std::size_t i = 0; i < 3; ++i) {
      final_rep[i] = state_[perm[i]].coord;
      auto x = decode_coordinate(sum_.terms()[i].kind, final_rep[i]);
      if (!x) fail("decode", "coordinate " + std::to_string(final_rep[i]) + " does not decode");
      indices[i] = *x;
    }
    if (sum_.evaluate(indices) != n_) fail("decode", "indices do not evaluate to n");
    Certificate cert{std::string(kCertificateVersion),
                     sum_,
                     n_,
                     reduction_,
                     source_,
                     source_form_,
                     initial_,
                     steps_,
                     final_rep,
                     indices,
                     fallback};
    return {indices, std::move(cert)};
  }

  SumForm sum_;
  Int n_;
  ReductionTarget reduction_;
  std::string label_;
  Int target_ = 0;
  SourceRule source_ = SourceRule::direct_search;
  std::array<Int, 3> source_form_{};
  Representation initial_{};
  State state_{};
  std::vector<RewriteStep> steps_;
};

// u^2 + v^2 + 3w^2: make u odd (swapping u, v if needed) and v, w odd.
// Returns the position holding u.
int odd_triple_113(Chain& ch) {
  const int i = ch.pick({0, 1}, is_odd, "odd among the unit-coefficient pair");
  const int j = 1 - i;
  ch.step(Rule::odd_x2_3y2, {j, 2});
  return i;
}

// 24n+5 = u^2 + v^2 + 3w^2.
void chain_1_3(Chain& ch) {
  ch.start_direct({1, 1, 3});
  const int i = odd_triple_113(ch);
  ch.step(Rule::coprime6_x2_3y2, {1 - i, 2});
}

// 24n+6 = v^2 + 2u^2 + 3w^2; u is odd, v and w share parity.
void chain_2_3(Chain& ch) {
  ch.start_direct({1, 2, 3});
  ch.step(Rule::odd_x2_3y2, {0, 2});
  ch.step(Rule::coprime3_x2_2y2, {0, 1});
  ch.step(Rule::coprime6_x2_3y2, {0, 2});
}

// 24n+7 = u^2 + 3v^2 + 3w^2 with w odd (swapping v, w if needed).
void chain_3_3(Chain& ch) {
  ch.start_direct({1, 3, 3});
  const int k = ch.pick({2, 1}, is_odd, "odd among the 3-coefficient pair");
  const int j = 3 - k;
  ch.step(Rule::odd_x2_3y2, {0, j});
  ch.step(Rule::coprime6_x2_3y2, {0, j});
  ch.step(Rule::coprime6_x2_3y2, {0, k});
}

// 24n+8 = u^2 + v^2 + 3w^2 with w odd; the even one of u, v is 2r.
void chain_3_4(Chain& ch) {
  ch.start_direct({1, 1, 3}, {Predicate::any(), Predicate::any(), Predicate::odd()});
  const int i = ch.pick({0, 1}, [](Int t) { return !is_odd(t); }, "even among the unit pair");
  ch.step(Rule::rescale, {i}, 2);
  ch.step(Rule::coprime6_x2_3y2, {1 - i, 2});
}

// target = u^2 + v^2 + 3w^2  ->  x^2 + 3y^2 + 9z^2 with x, y, z prime to 6.
void chain_1_3_9(Chain& ch) {
  ch.start_direct({1, 1, 3});
  const int i = odd_triple_113(ch);
  const int j = 1 - i;
  // Both unit-coefficient coordinates are odd now and exactly one is divisible by 3.
  const int p = ch.pick({i, j}, [](Int t) { return t % 3 != 0; }, "prime to 3");
  const int q = p == i ? j : i;
  if (ch.coord(q) % 3 != 0) ch.fail("choice", "neither unit coordinate is divisible by 3");
  ch.step(Rule::coprime6_x2_3y2, {p, 2});
  ch.step(Rule::rescale, {q}, 3);
  ch.step(Rule::coprime6_x2_3y2, {2, q});
}

// 8n+3 = x^2 + y^2 + z^2, all odd; tripled by the Jacobi split.
void chain_2_6(Chain& ch, Int n) {
  Representation odd3{};
  try {
    odd3 = three_squares_odd(n);
  } catch (const SearchExhausted& e) {
    ch.fail("three-squares", e.what());
  }
  constexpr std::array<std::array<int, 3>, 3> kArrangements{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
  for (const auto& a : kArrangements) {
    for (Int sign : {1, -1}) {
      const Int x = odd3[a[0]], y = sign * odd3[a[1]], z = odd3[a[2]];
      if (arith::mod(x - y, 4) == 0) continue;
      ch.start(SourceRule::three_squares, {1, 1, 1}, {x, y, z});
      ch.step(Rule::jacobi_split, {0, 1, 2});
      ch.step(Rule::coprime3_x2_2y2, {0, 1});
      ch.step(Rule::coprime6_x2_3y2, {1, 2});
      return;
    }
  }
  ch.fail("arrange", "no pair of odd squares differs mod 4");
}

bool is_pm2_mod5(Int t) {
  const Int r = arith::mod(t, 5);
  return r == 2 || r == 3;
}

// 120n+77 = a^2 + b^2 + 3c^2 with a, b, c odd and c == +-2 (mod 5).
// Returns false when the case analysis did not land (the caller falls back).
bool claim_pm2_mod5(Chain& ch) {
  ch.start_direct({1, 1, 3});
  odd_triple_113(ch);
  const Int w = ch.coord(2);
  if (is_pm2_mod5(w)) return true;
  const Int wr = arith::mod(w, 5);
  int partner = -1;
  for (int p : {0, 1}) {
    const Int r = arith::mod(ch.coord(p), 5);
    const bool fits = wr == 0 ? (r == 1 || r == 4) : r == 0;
    if (fits) {
      partner = p;
      break;
    }
  }
  if (partner < 0) return false;
  for (Int sign : {1, -1}) {
    if (arith::mod(ch.coord(partner) - sign * w, 4) != 0) {
      ch.step(Rule::rotate_x2_3y2, {partner, 2}, sign);
      break;
    }
  }
  return is_odd(ch.coord(0)) && is_odd(ch.coord(1)) && is_odd(ch.coord(2)) &&
         is_pm2_mod5(ch.coord(2));
}

}  // namespace

Witness witness_pentagonal(Int b, Int c, Int n) {
  using Case = void (*)(Chain&);
  Case run = nullptr;
  if (b == 1 && c == 3) run = chain_1_3;
  if (b == 2 && c == 3) run = chain_2_3;
  if (b == 3 && c == 3) run = chain_3_3;
  if (b == 3 && c == 4) run = chain_3_4;
  if (b == 3 && c == 9) run = chain_1_3_9;
  if (run == nullptr && !(b == 2 && c == 6)) {
    throw PreconditionError("no constructive chain for p5+" + std::to_string(b) + "p5+" +
                            std::to_string(c) + "p5");
  }
  Chain ch(pentagonal_sum(b, c), n,
           "p5+" + std::to_string(b) + "p5+" + std::to_string(c) + "p5");
  if (run) {
    run(ch);
  } else {
    chain_2_6(ch, n);
  }
  return ch.finish();
}

Witness witness_p3_p5_p11(Int n) {
  Chain ch(parse_sum("p3+p5+p11"), n, "p3+p5+p11");
  chain_1_3_9(ch);
  // The unit-coefficient coordinate is prime to 6 and squares to 61 (mod 9).
  for (int p : {0, 1, 2}) {
    if (ch.coef(p) != 1) continue;
    const Int r = arith::mod(ch.coord(p), 9);
    if (r != 2 && r != 7) ch.fail("mod-9", "coordinate is not +-7 mod 9");
  }
  return ch.finish();
}

Witness witness_3p3_p5_p7(Int n) {
  Chain ch(parse_sum("3p3+p5+p7"), n, "3p3+p5+p7");
  bool fallback = false;
  if (!claim_pm2_mod5(ch)) {
    fallback = true;
    ch.start_direct({1, 1, 3}, {Predicate::odd(), Predicate::odd(), Predicate::residues(10, {3, 7})});
  }
  ch.step(Rule::five_split, {0, 1});
  const int q = ch.pick({0, 1}, [](Int t) { return t % 3 == 0; }, "divisible by 3");
  ch.step(Rule::rescale, {q}, 3);
  return ch.finish(fallback);
}

namespace {

const std::array<std::pair<Int, Int>, 6> kPentagonalPairs{
    {{1, 3}, {2, 3}, {2, 6}, {3, 3}, {3, 4}, {3, 9}}};

}  // namespace

bool has_pipeline(const SumForm& sum) {
  if (sum.domain() != Domain::integers) return false;
  if (sum == parse_sum("p3+p5+p11") || sum == parse_sum("3p3+p5+p7")) return true;
  for (auto [b, c] : kPentagonalPairs) {
    if (sum == pentagonal_sum(b, c)) return true;
  }
  return false;
}

Witness witness(const SumForm& sum, Int n) {
  if (sum.domain() == Domain::integers) {
    if (sum == parse_sum("p3+p5+p11")) return witness_p3_p5_p11(n);
    if (sum == parse_sum("3p3+p5+p7")) return witness_3p3_p5_p7(n);
    for (auto [b, c] : kPentagonalPairs) {
      if (sum == pentagonal_sum(b, c)) return witness_pentagonal(b, c, n);
    }
  }
  throw PreconditionError("no constructive chain for " + sum.to_string());
}

}  // namespace polysum

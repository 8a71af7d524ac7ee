#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "polysum/arith.hpp"
#include "polysum/certify.hpp"
#include "polysum/errors.hpp"
#include "polysum/pipelines.hpp"
#include "polysum/ternary.hpp"

using namespace polysum;

namespace {

const std::vector<std::string> kSupported = {"p5+p5+3p5", "p5+2p5+3p5", "p5+2p5+6p5",
                                             "p5+3p5+3p5", "p5+3p5+4p5", "p5+3p5+9p5",
                                             "p3+p5+p11",  "3p3+p5+p7"};

// Closed form, independent of the library's evaluator.
Int poly(Int m, Int x) { return ((m - 2) * x * x - (m - 4) * x) / 2; }

Int evaluate_independently(const SumForm& s, const std::array<Int, 3>& idx) {
  Int total = 0;
  for (std::size_t i = 0; i < 3; ++i) total += s.terms()[i].coef * poly(s.terms()[i].kind.order(), idx[i]);
  return total;
}

}  // namespace

TEST_CASE("square_complete") {
  auto c5 = square_complete(5);
  CHECK(c5.scale == 24);
  CHECK(c5.shift == 1);
  CHECK(c5.slope == 6);
  CHECK(c5.offset == 1);
  auto c3 = square_complete(3);
  CHECK(c3.scale == 8);
  CHECK(c3.shift == 1);
  CHECK(c3.slope == 2);
  CHECK(c3.offset == -1);
  auto c11 = square_complete(11);
  CHECK(c11.scale == 72);
  CHECK(c11.shift == 49);
  CHECK(c11.slope == 18);
  CHECK(c11.offset == 7);
  CHECK_THROWS_AS(square_complete(2), PreconditionError);
}

TEST_CASE("reductions") {
  auto r = reduce_pentagonal(1, 3);
  CHECK(r.multiplier == 24);
  CHECK(r.constant == 5);
  CHECK(r.form == DiagonalForm(1, 1, 3));
  CHECK(r.constraints == all_coords(Predicate::coprime_to_6()));

  CHECK(reduce_pentagonal(3, 3).constant == 7);
  CHECK(reduce_pentagonal(3, 3).form == DiagonalForm(1, 3, 3));
  CHECK(reduce_pentagonal(2, 6).constant == 9);
  CHECK(reduce_pentagonal(2, 6).form == DiagonalForm(1, 2, 6));

  auto a = reduce(parse_sum("p3+p5+p11"));
  CHECK(a.multiplier == 72);
  CHECK(a.constant == 61);
  CHECK(a.form == DiagonalForm(9, 3, 1));
  CHECK(a.constraints[0] == Predicate::odd());
  CHECK(a.constraints[1] == Predicate::coprime_to_6());
  CHECK(a.constraints[2] == Predicate::residues(18, {7, 11}));

  auto b = reduce(parse_sum("3p3+p5+p7"));
  CHECK(b.multiplier == 120);
  CHECK(b.constant == 77);
  CHECK(b.form == DiagonalForm(45, 5, 3));
  CHECK(b.constraints[2] == Predicate::residues(10, {3, 7}));

  CHECK_THROWS_AS(reduce(parse_sum("p5+p5")), PreconditionError);
}

TEST_CASE("pentagonal witness examples") {
  CHECK(witness_pentagonal(1, 3, 0).indices == std::array<Int, 3>{0, 0, 0});
  CHECK(witness_pentagonal(1, 3, 1).indices == std::array<Int, 3>{0, 1, 0});
  auto w = witness_pentagonal(2, 3, 2);
  CHECK(w.indices == std::array<Int, 3>{0, 1, 0});
  CHECK(w.certificate.final_rep == Representation{1, 5, 1});
}

TEST_CASE("second-family witness examples") {
  CHECK(witness_p3_p5_p11(0).indices == std::array<Int, 3>{0, 0, 0});
  CHECK(witness_p3_p5_p11(1).indices == std::array<Int, 3>{0, 1, 0});
  CHECK(witness_p3_p5_p11(2).indices == std::array<Int, 3>{0, 1, 1});
  CHECK(witness_3p3_p5_p7(0).indices == std::array<Int, 3>{0, 0, 0});
  CHECK(witness_3p3_p5_p7(1).indices == std::array<Int, 3>{0, 1, 0});
  CHECK(witness_3p3_p5_p7(2).indices == std::array<Int, 3>{0, -1, 0});
}

TEST_CASE("unsupported inputs are rejected") {
  CHECK_THROWS_AS(witness_pentagonal(1, 1, 5), PreconditionError);
  CHECK_THROWS_AS(witness_pentagonal(3, 6, 5), PreconditionError);
  CHECK_THROWS_AS(witness_pentagonal(3, 1, 5), PreconditionError);
  CHECK_THROWS_AS(witness_pentagonal(1, 3, -1), PreconditionError);
  CHECK_THROWS_AS(witness_p3_p5_p11(-1), PreconditionError);
  CHECK_FALSE(has_pipeline(parse_sum("p5+p5+p5")));
  CHECK_FALSE(has_pipeline(parse_sum("p5+3p5+p5")));
  CHECK_FALSE(has_pipeline(parse_sum("p5+p5+3p5", Domain::naturals)));
  CHECK_THROWS_AS(witness(parse_sum("p5+p5+p5"), 3), PreconditionError);
  for (const auto& s : kSupported) CHECK(has_pipeline(parse_sum(s)));
}

TEST_CASE("chain sources") {
  auto src = [](Int b, Int c) { return witness_pentagonal(b, c, 17).certificate; };
  CHECK(src(1, 3).source_form == std::array<Int, 3>{1, 1, 3});
  CHECK(src(2, 3).source_form == std::array<Int, 3>{1, 2, 3});
  CHECK(src(3, 3).source_form == std::array<Int, 3>{1, 3, 3});
  CHECK(src(3, 4).source_form == std::array<Int, 3>{1, 1, 3});
  CHECK(src(3, 9).source_form == std::array<Int, 3>{1, 1, 3});
  CHECK(src(2, 6).source == SourceRule::three_squares);
  CHECK(src(2, 6).source_form == std::array<Int, 3>{1, 1, 1});
  CHECK(witness_p3_p5_p11(17).certificate.source_form == std::array<Int, 3>{1, 1, 3});
  CHECK(witness_3p3_p5_p7(17).certificate.source_form == std::array<Int, 3>{1, 1, 3});
  // 3*(8n+3) == 24n+9 for the three-squares chain.
  auto c = src(2, 6);
  CHECK(c.initial[0] * c.initial[0] + c.initial[1] * c.initial[1] + c.initial[2] * c.initial[2] ==
        8 * 17 + 3);
}

TEST_CASE("pipelines agree with brute force for n <= 2000") {
  for (const auto& text : kSupported) {
    const SumForm sum = parse_sum(text);
    const ReductionTarget target = reduce(sum);
    long failures = 0;
    for (Int n = 0; n <= 2000; ++n) {
      Witness w = witness(sum, n);
      const Certificate& c = w.certificate;
      bool ok = evaluate_independently(sum, w.indices) == n && c.indices == w.indices &&
                c.n == n && !c.fallback && c.reduction == target;
      ok = ok && target.form.value(c.final_rep) == target.multiplier * n + target.constant;
      for (std::size_t i = 0; i < 3; ++i) ok = ok && target.constraints[i].accepts(c.final_rep[i]);
      // Coordinate-only rewrites must move something; jacobi_split and rescale
      // always change coefficients.
      for (const auto& step : c.steps) {
        if (step.rule != Rule::jacobi_split && step.rule != Rule::rescale)
          ok = ok && step.inputs != step.outputs;
      }
      ok = ok && static_cast<bool>(verify(c));
      ok = ok && represent(target.form, target.multiplier * n + target.constant, target.constraints)
                     .has_value();
      if (!ok && failures++ == 0) FAIL_CHECK(text << " fails at n=" << n);
    }
    CHECK_MESSAGE(failures == 0, text);
  }
}

TEST_CASE("decoded coordinates re-encode to the certificate") {
  for (const auto& text : kSupported) {
    const SumForm sum = parse_sum(text);
    for (Int n : {0, 1, 2, 97, 1234, 99999}) {
      auto w = witness(sum, n);
      auto perm_ok = [&] {
        // Each index re-encodes to +-(some final coordinate) with the right weight.
        for (std::size_t i = 0; i < 3; ++i) {
          const Int t = encode_index(sum.terms()[i].kind, w.indices[i]);
          bool found = false;
          for (Int f : w.certificate.final_rep) found = found || f == t || f == -t;
          if (!found) return false;
        }
        return true;
      };
      CHECK_MESSAGE(perm_ok(), text << " n=" << n);
      CHECK(sum.evaluate(w.indices) == n);
    }
  }
}

TEST_CASE("witnesses are deterministic") {
  for (const auto& text : kSupported) {
    const SumForm sum = parse_sum(text);
    for (Int n : {5, 500, 5000}) {
      auto a = witness(sum, n), b = witness(sum, n);
      CHECK(a.certificate == b.certificate);
      CHECK(serialize(a.certificate) == serialize(b.certificate));
    }
  }
}

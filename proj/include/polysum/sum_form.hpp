#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polysum/polygonal.hpp"
#include "polysum/ternary.hpp"

namespace polysum {

enum class Domain { integers, naturals };

struct SumTerm {
  Int coef;
  PolygonalKind kind;

  bool operator==(const SumTerm&) const = default;
};

/// a p_i + b p_j + c p_k (one to three terms) over the integers or naturals.
class SumForm {
 public:
  /// Throws PreconditionError for 0 or more than 3 terms or a coefficient < 1.
  SumForm(std::vector<SumTerm> terms, Domain domain = Domain::integers);

  const std::vector<SumTerm>& terms() const noexcept { return terms_; }
  Domain domain() const noexcept { return domain_; }

  /// Sum of coef * p_m(index) over the terms.
  Int evaluate(std::span<const Int> indices) const;

  /// "p5+2p5+6p5" (the domain is not part of the text).
  std::string to_string() const;

  bool operator==(const SumForm&) const = default;

 private:
  std::vector<SumTerm> terms_;
  Domain domain_;
};

/// Parses "[a*]pM[+[a*]pM...]", e.g. "p5+2p5+6p5", "3*p3+p5+p7".
/// Throws PreconditionError with the offending position on malformed input.
SumForm parse_sum(std::string_view text, Domain domain = Domain::integers);

/// p_5 + b p_5 + c p_5.
SumForm pentagonal_sum(Int b, Int c, Domain domain = Domain::integers);

/// The data turning "n = sum" into "multiplier*n + constant = form(t)" where the
/// coordinates t must satisfy `constraints` to decode to polygonal indices.
struct ReductionTarget {
  Int multiplier;
  Int constant;
  DiagonalForm form;
  CoordConstraint constraints;

  bool operator==(const ReductionTarget&) const = default;
};

/// Coordinates t that decode to a p_m index: t == +-(m-4) mod 2(m-2).
/// Returned as coprime6 for m = 5 and odd for m = 3.
Predicate coordinate_predicate(PolygonalKind kind);

}  // namespace polysum

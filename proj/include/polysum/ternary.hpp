#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polysum/arith.hpp"

namespace polysum {

/// Integer triple (x, y, z).
using Representation = std::array<Int, 3>;

/// a x^2 + b y^2 + c z^2 with a, b, c >= 1.
class DiagonalForm {
 public:
  DiagonalForm(Int a, Int b, Int c);

  Int coefficient(std::size_t i) const { return coef_.at(i); }
  const std::array<Int, 3>& coefficients() const noexcept { return coef_; }
  Int value(const Representation& r) const;

  bool operator==(const DiagonalForm&) const = default;

 private:
  std::array<Int, 3> coef_;
};

/// Congruence condition on one signed coordinate. Residue classes are tested
/// on the coordinate itself, not its absolute value.
class Predicate {
 public:
  enum class Kind { any, odd, coprime3, coprime6, residues };

  static Predicate any() { return Predicate(Kind::any); }
  static Predicate odd() { return Predicate(Kind::odd); }
  static Predicate coprime_to_3() { return Predicate(Kind::coprime3); }
  static Predicate coprime_to_6() { return Predicate(Kind::coprime6); }
  /// Throws PreconditionError for modulus < 1 or an empty class list.
  static Predicate residues(Int modulus, std::vector<Int> classes);

  /// Inverse of describe(): "any", "odd", "coprime3", "coprime6", "mod18:7,11".
  static Predicate parse(std::string_view text);

  bool accepts(Int t) const;
  Kind kind() const noexcept { return kind_; }
  Int modulus() const noexcept { return modulus_; }
  const std::vector<Int>& classes() const noexcept { return classes_; }
  std::string describe() const;

  bool operator==(const Predicate&) const = default;

 private:
  explicit Predicate(Kind k) : kind_(k) {}

  Kind kind_;
  Int modulus_ = 1;
  std::vector<Int> classes_;
};

using CoordConstraint = std::array<Predicate, 3>;

inline CoordConstraint unconstrained() {
  return {Predicate::any(), Predicate::any(), Predicate::any()};
}

inline CoordConstraint all_coords(const Predicate& p) { return {p, p, p}; }

/// Canonical representation of n by the form under the constraints, or nullopt.
///
/// Canonical means lexicographically least by (|x|, |y|, |z|) and then by sign
/// pattern, nonnegative before negative, x's sign most significant. The scan
/// is exhaustive over |x| <= isqrt(n/a), |y| <= isqrt(n/b); z is solved for.
std::optional<Representation> represent(const DiagonalForm& form, Int n,
                                        const CoordConstraint& cons = unconstrained());

/// { n <= bound : n is not a x^2 + b y^2 + c z^2 for any integers x, y, z }.
std::vector<Int> excluded_set_bruteforce(const DiagonalForm& form, Int bound);

/// Closed-form excluded-set membership for the three forms
///   (1,1,3): 9^k (9l + 6)    (1,2,3): 4^k (16l + 10)    (1,3,3): 9^k (3l + 2)
/// Coefficients may be given in any order; other forms throw PreconditionError.
bool dickson_member(const DiagonalForm& form, Int n);

/// Odd x >= y >= z >= 1 with x^2 + y^2 + z^2 == 8n + 3, lexicographically least
/// among such nonincreasing triples. Throws SearchExhausted if none is found.
Representation three_squares_odd(Int n);

}  // namespace polysum

#include "polysum/ternary.hpp"

#include <algorithm>
#include <charconv>

#include "polysum/errors.hpp"

namespace polysum {

DiagonalForm::DiagonalForm(Int a, Int b, Int c) : coef_{a, b, c} {
  if (a < 1 || b < 1 || c < 1) {
    throw PreconditionError("diagonal form coefficients must be positive");
  }
}

Int DiagonalForm::value(const Representation& r) const {
  Int total = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    total = arith::add(total, arith::mul(coef_[i], arith::square(r[i])));
  }
  return total;
}

Predicate Predicate::residues(Int modulus, std::vector<Int> classes) {
  if (modulus < 1) throw PreconditionError("residue modulus must be at least 1");
  if (classes.empty()) throw PreconditionError("residue set must be nonempty");
  for (auto& r : classes) r = arith::mod(r, modulus);
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  Predicate p(Kind::residues);
  p.modulus_ = modulus;
  p.classes_ = std::move(classes);
  return p;
}

namespace {

Int parse_small(std::string_view s) {
  Int v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size() || s.empty()) {
    throw PreconditionError("bad integer '" + std::string(s) + "' in predicate");
  }
  return v;
}

}  // namespace

Predicate Predicate::parse(std::string_view text) {
  if (text == "any") return any();
  if (text == "odd") return odd();
  if (text == "coprime3") return coprime_to_3();
  if (text == "coprime6") return coprime_to_6();
  if (text.starts_with("mod")) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
      throw PreconditionError("predicate '" + std::string(text) + "' lacks ':'");
    }
    Int q = parse_small(text.substr(3, colon - 3));
    std::vector<Int> classes;
    auto rest = text.substr(colon + 1);
    while (true) {
      auto comma = rest.find(',');
      classes.push_back(parse_small(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    auto p = residues(q, classes);
    if (p.describe() != text) {
      throw PreconditionError("predicate '" + std::string(text) + "' is not in canonical form");
    }
    return p;
  }
  throw PreconditionError("unknown predicate '" + std::string(text) + "'");
}

bool Predicate::accepts(Int t) const {
  switch (kind_) {
    case Kind::any:
      return true;
    case Kind::odd:
      return t % 2 != 0;
    case Kind::coprime3:
      return t % 3 != 0;
    case Kind::coprime6:
      return t % 2 != 0 && t % 3 != 0;
    case Kind::residues:
      return std::binary_search(classes_.begin(), classes_.end(), arith::mod(t, modulus_));
  }
  return false;
}

std::string Predicate::describe() const {
  switch (kind_) {
    case Kind::any:
      return "any";
    case Kind::odd:
      return "odd";
    case Kind::coprime3:
      return "coprime3";
    case Kind::coprime6:
      return "coprime6";
    case Kind::residues: {
      std::string s = "mod" + std::to_string(modulus_) + ":";
      for (std::size_t i = 0; i < classes_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(classes_[i]);
      }
      return s;
    }
  }
  return {};
}

namespace {

// Signed candidates for a coordinate of absolute value a, nonnegative first.
int signed_candidates(Int a, const Predicate& p, Int out[2]) {
  int k = 0;
  if (p.accepts(a)) out[k++] = a;
  if (a != 0 && p.accepts(-a)) out[k++] = -a;
  return k;
}

}  // namespace

std::optional<Representation> represent(const DiagonalForm& form, Int n,
                                        const CoordConstraint& cons) {
  if (n < 0) throw PreconditionError("represent expects n >= 0");
  const Int a = form.coefficient(0), b = form.coefficient(1), c = form.coefficient(2);
  Int xs[2], ys[2], zs[2];
  for (Int ax = 0, ax_max = arith::isqrt(n / a); ax <= ax_max; ++ax) {
    int nx = signed_candidates(ax, cons[0], xs);
    if (nx == 0) continue;
    const Int rx = n - a * ax * ax;
    for (Int ay = 0, ay_max = arith::isqrt(rx / b); ay <= ay_max; ++ay) {
      int ny = signed_candidates(ay, cons[1], ys);
      if (ny == 0) continue;
      const Int ry = rx - b * ay * ay;
      if (ry % c != 0) continue;
      Int az;
      if (!arith::is_square(ry / c, &az)) continue;
      int nz = signed_candidates(az, cons[2], zs);
      if (nz == 0) continue;
      return Representation{xs[0], ys[0], zs[0]};
    }
  }
  return std::nullopt;
}

std::vector<Int> excluded_set_bruteforce(const DiagonalForm& form, Int bound) {
  if (bound < 0) throw PreconditionError("excluded_set_bruteforce expects bound >= 0");
  const Int a = form.coefficient(0), b = form.coefficient(1), c = form.coefficient(2);
  std::vector<char> hit(static_cast<std::size_t>(bound) + 1, 0);
  for (Int x = 0; a * x * x <= bound; ++x) {
    for (Int y = 0; a * x * x + b * y * y <= bound; ++y) {
      const Int rest = a * x * x + b * y * y;
      for (Int z = 0; rest + c * z * z <= bound; ++z) hit[rest + c * z * z] = 1;
    }
  }
  std::vector<Int> out;
  for (Int n = 0; n <= bound; ++n) {
    if (!hit[n]) out.push_back(n);
  }
  return out;
}

bool dickson_member(const DiagonalForm& form, Int n) {
  if (n < 0) throw PreconditionError("dickson_member expects n >= 0");
  auto k = form.coefficients();
  std::sort(k.begin(), k.end());
  Int strip = 0, modulus = 0, residue = 0;
  if (k == std::array<Int, 3>{1, 1, 3}) {
    strip = 9, modulus = 9, residue = 6;
  } else if (k == std::array<Int, 3>{1, 2, 3}) {
    strip = 4, modulus = 16, residue = 10;
  } else if (k == std::array<Int, 3>{1, 3, 3}) {
    strip = 9, modulus = 3, residue = 2;
  } else {
    throw PreconditionError("no closed-form excluded set for this form");
  }
  while (n != 0 && n % strip == 0) n /= strip;
  return n % modulus == residue;
}

Representation three_squares_odd(Int n) {
  if (n < 0) throw PreconditionError("three_squares_odd expects n >= 0");
  const Int target = arith::add(arith::mul(8, n), 3);
  // x is the largest coordinate, so 3x^2 >= target.
  Int x = arith::isqrt(target / 3);
  if (3 * x * x < target) ++x;
  if (x % 2 == 0) ++x;
  for (; x * x < target; x += 2) {
    const Int rx = target - x * x;
    Int y = arith::isqrt(rx / 2);
    if (2 * y * y < rx) ++y;
    if (y % 2 == 0) ++y;
    for (; y <= x && y * y < rx; y += 2) {
      Int z;
      if (arith::is_square(rx - y * y, &z) && z % 2 == 1 && z <= y) return {x, y, z};
    }
  }
  throw SearchExhausted("no representation of " + std::to_string(target) +
                        " as a sum of three odd squares");
}

}  // namespace polysum

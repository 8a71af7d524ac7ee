#include "polysum/sum_form.hpp"

#include <cctype>
#include <charconv>

#include "polysum/errors.hpp"

namespace polysum {

SumForm::SumForm(std::vector<SumTerm> terms, Domain domain)
    : terms_(std::move(terms)), domain_(domain) {
  if (terms_.empty() || terms_.size() > 3) {
    throw PreconditionError("a sum has between 1 and 3 terms");
  }
  for (const auto& t : terms_) {
    if (t.coef < 1) throw PreconditionError("sum coefficients must be positive");
  }
}

Int SumForm::evaluate(std::span<const Int> indices) const {
  if (indices.size() != terms_.size()) {
    throw PreconditionError("index count differs from term count");
  }
  Int total = 0;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    total = arith::add(total, arith::mul(terms_[i].coef, eval(terms_[i].kind, indices[i])));
  }
  return total;
}

std::string SumForm::to_string() const {
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += '+';
    if (t.coef != 1) s += std::to_string(t.coef);
    s += 'p' + std::to_string(t.kind.order());
  }
  return s;
}

namespace {

[[noreturn]] void syntax_error(std::string_view text, std::size_t pos, const std::string& what) {
  throw PreconditionError("malformed sum '" + std::string(text) + "' at offset " +
                          std::to_string(pos) + ": " + what);
}

Int read_number(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) syntax_error(text, start, "expected a number");
  Int v = 0;
  auto [end, ec] = std::from_chars(text.data() + start, text.data() + pos, v);
  if (ec != std::errc{}) syntax_error(text, start, "number out of range");
  return v;
}

}  // namespace

SumForm parse_sum(std::string_view text, Domain domain) {
  std::vector<SumTerm> terms;
  std::size_t pos = 0;
  while (true) {
    Int coef = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coef = read_number(text, pos);
      if (pos < text.size() && text[pos] == '*') ++pos;
      if (coef < 1) syntax_error(text, pos, "coefficient must be positive");
    }
    if (pos >= text.size() || text[pos] != 'p') syntax_error(text, pos, "expected 'p'");
    ++pos;
    Int order = read_number(text, pos);
    if (order < 3) syntax_error(text, pos, "polygonal order must be at least 3");
    terms.push_back({coef, PolygonalKind(order)});
    if (pos == text.size()) break;
    if (text[pos] != '+') syntax_error(text, pos, "expected '+'");
    ++pos;
  }
  if (terms.size() > 3) syntax_error(text, text.size(), "at most 3 terms");
  return SumForm(std::move(terms), domain);
}

SumForm pentagonal_sum(Int b, Int c, Domain domain) {
  const PolygonalKind p5(5);
  return SumForm({{1, p5}, {b, p5}, {c, p5}}, domain);
}

Predicate coordinate_predicate(PolygonalKind kind) {
  if (kind.order() == 5) return Predicate::coprime_to_6();
  if (kind.order() == 3) return Predicate::odd();
  auto sc = square_completion(kind);
  return Predicate::residues(sc.slope, {sc.offset, -sc.offset});
}

}  // namespace polysum

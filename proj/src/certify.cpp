#include "polysum/certify.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include <json.hpp>

#include "polysum/errors.hpp"

namespace polysum {

using Json = nlohmann::ordered_json;

std::string_view source_name(SourceRule s) {
  return s == SourceRule::direct_search ? "direct-search" : "three-squares";
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace {

std::string dec(Int v) { return std::to_string(v); }

template <typename Range>
Json dec_array(const Range& r) {
  Json a = Json::array();
  for (Int v : r) a.push_back(dec(v));
  return a;
}

}  // namespace

std::string serialize(const Certificate& cert) {
  Json j;
  j["version"] = cert.version;

  Json terms = Json::array();
  for (const auto& t : cert.sum.terms()) {
    Json term;
    term["coefficient"] = dec(t.coef);
    term["order"] = dec(t.kind.order());
    terms.push_back(std::move(term));
  }
  j["sum"]["domain"] = cert.sum.domain() == Domain::integers ? "Z" : "N";
  j["sum"]["terms"] = std::move(terms);
  j["n"] = dec(cert.n);

  Json constraints = Json::array();
  for (const auto& p : cert.reduction.constraints) constraints.push_back(p.describe());
  j["reduction"]["multiplier"] = dec(cert.reduction.multiplier);
  j["reduction"]["constant"] = dec(cert.reduction.constant);
  j["reduction"]["form"] = dec_array(cert.reduction.form.coefficients());
  j["reduction"]["constraints"] = std::move(constraints);

  j["source"]["rule"] = source_name(cert.source);
  j["source"]["form"] = dec_array(cert.source_form);
  j["initial"] = dec_array(cert.initial);

  Json steps = Json::array();
  for (const auto& s : cert.steps) {
    Json step;
    step["rule"] = rule_name(s.rule);
    step["param"] = dec(s.param);
    step["positions"] = s.positions;
    step["inputs"] = dec_array(s.inputs);
    step["outputs"] = dec_array(s.outputs);
    step["value"] = dec(s.value);
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  j["final"] = dec_array(cert.final_rep);
  j["indices"] = dec_array(cert.indices);
  j["fallback"] = cert.fallback;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

class Reader {
 public:
  [[noreturn]] static void fail(const std::string& path, const std::string& what) {
    throw CertificateParseError(path.empty() ? "$" : path, what);
  }

  static const Json& object(const Json& j, const std::string& path,
                            std::initializer_list<std::string_view> keys) {
    if (!j.is_object()) fail(path, "expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) {
        fail(join(path, it.key()), "unexpected field");
      }
    }
    for (auto k : keys) {
      if (!j.contains(k)) fail(join(path, std::string(k)), "missing field");
    }
    return j;
  }

  static Int integer(const Json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a decimal integer string");
    const auto& s = j.get_ref<const std::string&>();
    const bool canonical =
        !s.empty() && s != "-0" &&
        !(s.size() > 1 && s[0] == '0') && !(s.size() > 2 && s[0] == '-' && s[1] == '0');
    Int v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (!canonical || ec != std::errc{} || end != s.data() + s.size()) {
      fail(path, "'" + s + "' is not a canonical decimal integer");
    }
    return v;
  }

  static std::string text(const Json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
  }

  static std::vector<Int> integers(const Json& j, const std::string& path,
                                   std::optional<std::size_t> size = std::nullopt) {
    if (!j.is_array()) fail(path, "expected an array");
    if (size && j.size() != *size) fail(path, "expected " + std::to_string(*size) + " entries");
    std::vector<Int> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer(j[i], index(path, i)));
    return out;
  }

  static std::array<Int, 3> triple(const Json& j, const std::string& path) {
    auto v = integers(j, path, 3);
    return {v[0], v[1], v[2]};
  }

  static std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
  }
  static std::string index(const std::string& path, std::size_t i) {
    return path + "[" + std::to_string(i) + "]";
  }
};

SumForm read_sum(const Json& j) {
  Reader::object(j, "sum", {"domain", "terms"});
  const auto domain_text = Reader::text(j["domain"], "sum.domain");
  if (domain_text != "Z" && domain_text != "N") Reader::fail("sum.domain", "expected \"Z\" or \"N\"");
  const auto& terms = j["terms"];
  if (!terms.is_array()) Reader::fail("sum.terms", "expected an array");
  std::vector<SumTerm> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string path = Reader::index("sum.terms", i);
    Reader::object(terms[i], path, {"coefficient", "order"});
    const Int coef = Reader::integer(terms[i]["coefficient"], path + ".coefficient");
    const Int order = Reader::integer(terms[i]["order"], path + ".order");
    try {
      out.push_back({coef, PolygonalKind(order)});
    } catch (const PreconditionError& e) {
      Reader::fail(path + ".order", e.what());
    }
  }
  try {
    return SumForm(std::move(out), domain_text == "Z" ? Domain::integers : Domain::naturals);
  } catch (const PreconditionError& e) {
    Reader::fail("sum", e.what());
  }
}

ReductionTarget read_reduction(const Json& j) {
  Reader::object(j, "reduction", {"multiplier", "constant", "form", "constraints"});
  const Int multiplier = Reader::integer(j["multiplier"], "reduction.multiplier");
  const Int constant = Reader::integer(j["constant"], "reduction.constant");
  const auto f = Reader::triple(j["form"], "reduction.form");
  const auto& cons = j["constraints"];
  if (!cons.is_array() || cons.size() != 3) {
    Reader::fail("reduction.constraints", "expected an array of 3 predicates");
  }
  CoordConstraint constraints = unconstrained();
  for (std::size_t i = 0; i < 3; ++i) {
    const auto path = Reader::index("reduction.constraints", i);
    try {
      constraints[i] = Predicate::parse(Reader::text(cons[i], path));
    } catch (const PreconditionError& e) {
      Reader::fail(path, e.what());
    }
  }
  try {
    return ReductionTarget{multiplier, constant, DiagonalForm(f[0], f[1], f[2]), constraints};
  } catch (const PreconditionError& e) {
    Reader::fail("reduction.form", e.what());
  }
}

RewriteStep read_step(const Json& j, const std::string& path) {
  Reader::object(j, path, {"rule", "param", "positions", "inputs", "outputs", "value"});
  const auto name = Reader::text(j["rule"], path + ".rule");
  auto rule = rule_from_name(name);
  if (!rule) Reader::fail(path + ".rule", "unknown rule '" + name + "'");
  RewriteStep step{*rule, Reader::integer(j["param"], path + ".param"), {}, {}, {}, 0};
  const auto& pos = j["positions"];
  if (!pos.is_array()) Reader::fail(path + ".positions", "expected an array");
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (!pos[i].is_number_unsigned() || pos[i].get<std::uint64_t>() > 2) {
      Reader::fail(Reader::index(path + ".positions", i), "expected 0, 1 or 2");
    }
    step.positions.push_back(pos[i].get<int>());
  }
  step.inputs = Reader::integers(j["inputs"], path + ".inputs");
  step.outputs = Reader::integers(j["outputs"], path + ".outputs");
  step.value = Reader::integer(j["value"], path + ".value");
  return step;
}

}  // namespace

Certificate parse_certificate(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Byte offset -> line/column.
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw CertificateParseError("line " + std::to_string(line) + ", column " +
                                    std::to_string(column),
                                "invalid JSON");
  }
  Reader::object(j, "", {"version", "sum", "n", "reduction", "source", "initial", "steps",
                         "final", "indices", "fallback"});

  auto version = Reader::text(j["version"], "version");
  SumForm sum = read_sum(j["sum"]);
  const Int n = Reader::integer(j["n"], "n");
  ReductionTarget reduction = read_reduction(j["reduction"]);

  Reader::object(j["source"], "source", {"rule", "form"});
  const auto source_text = Reader::text(j["source"]["rule"], "source.rule");
  SourceRule source;
  if (source_text == source_name(SourceRule::direct_search)) {
    source = SourceRule::direct_search;
  } else if (source_text == source_name(SourceRule::three_squares)) {
    source = SourceRule::three_squares;
  } else {
    Reader::fail("source.rule", "unknown source rule '" + source_text + "'");
  }
  const auto source_form = Reader::triple(j["source"]["form"], "source.form");
  const auto initial = Reader::triple(j["initial"], "initial");

  const auto& steps_json = j["steps"];
  if (!steps_json.is_array()) Reader::fail("steps", "expected an array");
  std::vector<RewriteStep> steps;
  for (std::size_t i = 0; i < steps_json.size(); ++i) {
    steps.push_back(read_step(steps_json[i], Reader::index("steps", i)));
  }
  const auto final_rep = Reader::triple(j["final"], "final");
  const auto indices = Reader::triple(j["indices"], "indices");
  if (!j["fallback"].is_boolean()) Reader::fail("fallback", "expected true or false");

  return Certificate{std::move(version), std::move(sum),    n,         std::move(reduction),
                     source,             source_form,       initial,   std::move(steps),
                     final_rep,          indices,           j["fallback"].get<bool>()};
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

namespace {

struct Rejected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] void reject(const std::string& why) { throw Rejected(why); }

void check_reduction(const Certificate& c) {
  const auto& terms = c.sum.terms();
  if (terms.size() != 3) reject("only three-term sums reduce to a ternary form");
  Int multiplier = 1;
  for (const auto& t : terms) multiplier = arith::lcm(multiplier, square_completion(t.kind).scale);
  if (c.reduction.multiplier != multiplier) {
    reject("multiplier should be " + std::to_string(multiplier));
  }
  Int constant = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto sc = square_completion(terms[i].kind);
    const Int coef = arith::mul(terms[i].coef, multiplier / sc.scale);
    if (c.reduction.form.coefficient(i) != coef) {
      reject("form coefficient " + std::to_string(i) + " should be " + std::to_string(coef));
    }
    if (c.reduction.constraints[i] != coordinate_predicate(terms[i].kind)) {
      reject("constraint " + std::to_string(i) + " does not match the term's decoding class");
    }
    constant = arith::add(constant, arith::mul(coef, sc.shift));
  }
  if (c.reduction.constant != constant) reject("constant should be " + std::to_string(constant));
}

State initial_state(const Certificate& c) {
  State s{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (c.source_form[i] < 1) reject("source form coefficients must be positive");
    s[i] = Term{c.source_form[i], c.initial[i]};
  }
  if (c.source == SourceRule::three_squares) {
    if (c.source_form != std::array<Int, 3>{1, 1, 1}) reject("three-squares source form must be 1,1,1");
    for (Int t : c.initial) {
      if (t % 2 == 0) reject("three-squares source coordinates must be odd");
    }
  }
  return s;
}

void check(const Certificate& c) {
  if (c.version != kCertificateVersion) reject("unsupported version '" + c.version + "'");
  if (c.n < 0) reject("n must be nonnegative");
  check_reduction(c);

  const Int target = arith::add(arith::mul(c.reduction.multiplier, c.n), c.reduction.constant);
  State state = initial_state(c);
  if (c.source == SourceRule::direct_search && state_value(state) != target) {
    reject("direct-search representation does not evaluate to the target");
  }
  if (c.source == SourceRule::three_squares && arith::mul(3, state_value(state)) != target) {
    reject("three-squares representation is not a third of the target");
  }
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    try {
      replay(state, c.steps[i]);
    } catch (const PreconditionError& e) {
      reject("step " + std::to_string(i) + ": " + e.what());
    }
  }

  // The final triple is the replayed state under the first permutation (in
  // lexicographic order) whose terms fit the form's coefficients and
  // constraints. Fixing the arrangement keeps the certificate canonical.
  std::array<int, 3> perm{0, 1, 2};
  bool matched = false;
  do {
    matched = true;
    for (std::size_t i = 0; i < 3 && matched; ++i) {
      const auto& term = state[perm[i]];
      matched = term.coef == c.reduction.form.coefficient(i) &&
                c.reduction.constraints[i].accepts(term.coord);
    }
  } while (!matched && std::next_permutation(perm.begin(), perm.end()));
  for (std::size_t i = 0; i < 3 && matched; ++i) matched = state[perm[i]].coord == c.final_rep[i];
  if (!matched) reject("final representation is not the canonical arrangement of the replayed state");

  if (c.reduction.form.value(c.final_rep) != target) reject("final representation misses the target");
  for (std::size_t i = 0; i < 3; ++i) {
    if (!c.reduction.constraints[i].accepts(c.final_rep[i])) {
      reject("final coordinate " + std::to_string(i) + " violates " +
             c.reduction.constraints[i].describe());
    }
  }

  const auto& terms = c.sum.terms();
  for (std::size_t i = 0; i < 3; ++i) {
    auto x = decode_coordinate(terms[i].kind, c.final_rep[i]);
    if (!x || *x != c.indices[i]) {
      reject("index " + std::to_string(i) + " is not the canonical decoding of its coordinate");
    }
    if (c.sum.domain() == Domain::naturals && *x < 0) reject("negative index over N");
  }
  if (c.sum.evaluate(c.indices) != c.n) reject("indices do not evaluate to n");
}

}  // namespace

VerifyResult verify(const Certificate& cert) {
  try {
    check(cert);
  } catch (const Rejected& e) {
    return {false, e.what()};
  } catch (const std::overflow_error& e) {
    return {false, std::string("arithmetic overflow: ") + e.what()};
  } catch (const PreconditionError& e) {
    return {false, e.what()};
  }
  return {true, {}};
}

VerifyResult verify_text(std::string_view text) {
  try {
    return verify(parse_certificate(text));
  } catch (const CertificateParseError& e) {
    return {false, std::string("malformed certificate at ") + e.what()};
  }
}

}  // namespace polysum

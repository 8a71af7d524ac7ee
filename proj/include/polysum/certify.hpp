#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polysum/sum_form.hpp"
#include "polysum/transforms.hpp"

namespace polysum {

inline constexpr std::string_view kCertificateVersion = "polysum-certificate/1";

/// How the initial representation was obtained.
///  direct-search: a representation of multiplier*n + constant by `source_form`.
///  three-squares: odd x, y, z with x^2 + y^2 + z^2 == 3 (mod 8); the chain must
///                 triple the value (jacobi_split) to reach the target.
enum class SourceRule { direct_search, three_squares };

std::string_view source_name(SourceRule s);

/// Replayable record of one constructive witness. See docs/certificate.md.
struct Certificate {
  std::string version{kCertificateVersion};
  SumForm sum;
  Int n = 0;
  ReductionTarget reduction;
  SourceRule source = SourceRule::direct_search;
  std::array<Int, 3> source_form{};
  Representation initial{};
  std::vector<RewriteStep> steps;
  Representation final_rep{};
  std::array<Int, 3> indices{};
  bool fallback = false;

  bool operator==(const Certificate&) const = default;
};

/// Malformed certificate text. `where()` is a JSON path ("steps[2].outputs[0]")
/// or "line L, column C" for syntax errors.
class CertificateParseError : public std::runtime_error {
 public:
  CertificateParseError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// Canonical JSON text: fixed field order, two-space indent, integers as
/// decimal strings, trailing newline.
std::string serialize(const Certificate& cert);

/// Throws CertificateParseError.
Certificate parse_certificate(std::string_view text);

inline Certificate roundtrip(const Certificate& cert) { return parse_certificate(serialize(cert)); }

struct VerifyResult {
  bool ok = false;
  std::string reason;  // empty when ok

  explicit operator bool() const noexcept { return ok; }
};

/// Re-derives everything from the sum, n and the recorded steps:
///  - the reduction data follows from the sum's square completions;
///  - the source representation has the required shape and value;
///  - every step replays exactly and preserves its quadratic value;
///  - the final representation is the replayed state, matches the target form,
///    satisfies the constraints and equals multiplier*n + constant;
///  - each index is the canonical decoding of its coordinate and the sum of the
///    indices evaluates to n.
VerifyResult verify(const Certificate& cert);

/// Parses then verifies; parse failures become a failed result with position.
VerifyResult verify_text(std::string_view text);

}  // namespace polysum

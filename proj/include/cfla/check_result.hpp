#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cfla/element.hpp"
#include "cfla/membership.hpp"

namespace cfla {

enum class Verdict { ok, fail, not_homogeneous };

std::string_view to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view text);

/// Evidence for a failed check. `condition` names what failed; `elements` lists
/// the operands followed by any derived element (sum, multiple, bracket).
struct Witness {
  std::string condition;
  std::vector<Element> elements;
  std::optional<std::int64_t> scalar;
  std::vector<Membership> values;
  std::vector<int> indices;
  std::string detail;
};

struct CheckResult {
  Verdict verdict = Verdict::ok;
  std::optional<Witness> witness;

  bool ok() const { return verdict == Verdict::ok; }

  static CheckResult pass() { return {}; }
  static CheckResult failure(Witness w) { return {Verdict::fail, std::move(w)}; }
  static CheckResult not_homogeneous(Witness w) { return {Verdict::not_homogeneous, std::move(w)}; }
};

/// One-line human description: "OK" or "FAIL [condition] x=... y=... (detail)".
std::string describe(const CheckResult& result);

}  // namespace cfla

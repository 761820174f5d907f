#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cfla/harness/scenario.hpp"
#include "cfla/harness/suite.hpp"

namespace cfla::harness {

struct ProbeRequest {
  std::string theorem;
  std::string drop;
  std::uint64_t budget = 10000;
  std::uint64_t seed = 1;
  std::vector<CatalogEntry> catalog = default_catalog();
  int r_max_denominator = 10;
  int w_max_denominator = 4;
};

struct ProbeResult {
  std::string theorem;
  std::string drop;
  std::uint64_t attempts = 0;
  /// The first instance whose conclusion fails, with a replay check whose
  /// expected verdict is the observed one.
  std::optional<Scenario> instance;
  std::optional<CheckResult> conclusion;

  bool found() const { return instance.has_value(); }
  ordered_json to_json() const;
};

/// (theorem id, hypothesis) pairs the probe can drop.
std::vector<std::pair<std::string, std::string>> droppable_hypotheses();

/// Searches up to `budget` random instances that satisfy every hypothesis but
/// the dropped one. Throws std::invalid_argument for an unknown theorem id or
/// a hypothesis that is not droppable for it.
ProbeResult find_hypothesis_counterexample(const ProbeRequest& request);

}  // namespace cfla::harness

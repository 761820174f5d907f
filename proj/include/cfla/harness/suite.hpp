#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cfla/harness/scenario.hpp"

namespace cfla::harness {

/// "<catalog name>/<p>", e.g. "heisenberg3/3".
struct CatalogEntry {
  std::string name;
  int p = 3;

  std::string label() const { return name + "/" + std::to_string(p); }
  /// Throws std::invalid_argument for malformed labels.
  static CatalogEntry parse(const std::string& label);
  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

std::vector<CatalogEntry> default_catalog();

struct GenConfig {
  std::uint64_t seed = 1;
  int trials = 50;
  std::vector<CatalogEntry> catalog = default_catalog();
  int max_p = 7;
  int max_dim = 3;
  int r_max_denominator = 10;
  int w_max_denominator = 4;
  /// Exact theorem id, or a prefix ending before a '/' (e.g. "level").
  std::optional<std::string> theorem;
  /// 0 picks the hardware concurrency. Output does not depend on it.
  unsigned threads = 0;
  bool timing = false;
};

/// Throws std::invalid_argument for negative trials, an empty catalog, a
/// catalog entry outside max_p / max_dim, bounds outside module limits or an
/// unknown theorem filter.
void validate_config(const GenConfig& config);

struct TrialFailure {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  ordered_json outcome;
  ordered_json scenario;
};

struct TheoremReport {
  std::string id;
  std::uint64_t trials = 0;
  std::uint64_t passes = 0;
  std::uint64_t exhausted = 0;
  std::uint64_t failed = 0;
  std::size_t homs = 0;  // hom theorems only
  std::vector<TrialFailure> failures;  // first kMaxRecordedFailures
  double wall_ms = 0;

  /// PASS, FAIL, EXHAUSTED or VACUOUS.
  std::string verdict() const;
};

inline constexpr std::size_t kMaxRecordedFailures = 10;

struct SuiteReport {
  GenConfig config;
  std::vector<TheoremReport> theorems;
  std::string overall;

  ordered_json to_json() const;
};

/// Every theorem id the suite knows, in report order.
std::vector<std::string> theorem_ids();

SuiteReport run_suite(const GenConfig& config);

}  // namespace cfla::harness

#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cfla/check_result.hpp"
#include "cfla/fuzzy_set.hpp"
#include "cfla/hom.hpp"
#include "cfla/lie_algebra.hpp"

namespace cfla::harness {

using ordered_json = nlohmann::ordered_json;

/// Malformed JSON, a failing definition or an unresolved name.
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NamedSet {
  std::string name;
  std::string algebra;
  ComplexFuzzySet set;
};

struct CheckSpec {
  std::string op;
  std::vector<std::string> args;
  std::optional<Verdict> expect;
};

struct Scenario {
  std::vector<LieAlgebra> algebras;
  std::vector<NamedSet> fuzzy_sets;
  std::vector<LieHom> homs;
  std::vector<CheckSpec> checks;

  /// Lookups throw ScenarioError for unknown names.
  const LieAlgebra& algebra(const std::string& name) const;
  const NamedSet& fuzzy_set(const std::string& name) const;
  const LieHom& hom(const std::string& name) const;
  bool has_algebra(const std::string& name) const;
  bool has_fuzzy_set(const std::string& name) const;
  bool has_hom(const std::string& name) const;

  /// Adds an algebra unless one with the same name exists; throws ScenarioError
  /// if that one differs.
  void add_algebra(const LieAlgebra& L);
  void add_fuzzy_set(std::string name, const LieAlgebra& L, ComplexFuzzySet set);
  void add_hom(const LieHom& phi);
};

Scenario parse_scenario(const nlohmann::json& doc);
Scenario parse_scenario_text(const std::string& text);
Scenario load_scenario(const std::filesystem::path& path);

/// Fuzzy sets are written sparsely: the most frequent value becomes the
/// default (ties go to the value seen first in index order).
ordered_json to_json(const Scenario& s);
void write_scenario(const Scenario& s, const std::filesystem::path& path);

ordered_json to_json(const Witness& w);
ordered_json to_json(const CheckResult& r);
ordered_json to_json(const Membership& m);
ordered_json to_json(const Element& e);

}  // namespace cfla::harness

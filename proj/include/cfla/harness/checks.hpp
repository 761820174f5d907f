#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfla/harness/scenario.hpp"
#include "cfla/levels.hpp"

namespace cfla::harness {

struct CheckOutcome {
  CheckSpec spec;
  CheckResult result;
  std::optional<std::string> error;  // precondition or evaluation error
  bool passed = false;
};

/// Names of every check operation a scenario may use.
std::vector<std::string> check_ops();

/// Throws std::invalid_argument for an unknown op, a wrong arity or an unresolved name.
void validate_check(const Scenario& s, const CheckSpec& spec);
/// Evaluates one check; theorem ops throw PreconditionError when a hypothesis fails.
CheckResult evaluate_check(const Scenario& s, const CheckSpec& spec);
/// Never throws for a validated spec. Passes when the verdict equals `expect`,
/// or is OK when no expectation is given.
CheckOutcome run_check(const Scenario& s, const CheckSpec& spec);
std::vector<CheckOutcome> run_checks(const Scenario& s);

ordered_json to_json(const CheckOutcome& o);

/// Threshold grid for the level-cut commutation ops: {0, 1/4, 1/2, 3/4, 1} and
/// the amplitudes of B for alpha, {0, 1/2, 1, 3/2, 2} and the phases of B for beta.
std::vector<LevelSpec> levelcut_grid(const ComplexFuzzySet& B, bool strict_r, bool strict_w);

}  // namespace cfla::harness

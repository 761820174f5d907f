#pragma once

#include <optional>
#include <span>
#include <string>

#include "cfla/check_result.hpp"
#include "cfla/fuzzy_set.hpp"
#include "cfla/lie_algebra.hpp"
#include "cfla/predicates.hpp"

namespace cfla {

enum class Strength { upper, strong };
std::string_view to_string(Strength s);

/// For homogeneous A: OK iff "A is a complex fuzzy subalgebra (ideal)" agrees with
/// "every (strong) upper level at t in Im(mu_A) is a crisp subalgebra (ideal)".
/// NOT_HOMOGENEOUS otherwise.
CheckResult check_level_theorem(const LieAlgebra& L, const ComplexFuzzySet& A, Mode mode, Strength strength);

/// For homogeneous A, in both the subalgebra and the ideal form: OK iff
/// "A passes" agrees with "r-part passes and w-part passes as a pi-fuzzy set".
CheckResult check_decomposition_theorem(const LieAlgebra& L, const ComplexFuzzySet& A);

/// OK iff F passes the real predicate exactly when to_pi_fuzzy(F) passes the pi predicate.
CheckResult check_pi_scaling(const LieAlgebra& L, const RealFuzzySet& F, Mode mode);

/// Names the first unmet hypothesis of the sum-of-ideals theorem, if any.
std::optional<std::string> sum_ideal_hypothesis_gap(const LieAlgebra& L, const ComplexFuzzySet& A,
                                                    const ComplexFuzzySet& B);
/// For ideals A, B with A homogeneous with B: OK iff A + B is homogeneous and an ideal.
/// Throws PreconditionError naming the unmet hypothesis.
CheckResult check_sum_ideal_theorem(const LieAlgebra& L, const ComplexFuzzySet& A, const ComplexFuzzySet& B);
/// The conclusion alone, without hypothesis checks.
CheckResult sum_ideal_conclusion(const LieAlgebra& L, const ComplexFuzzySet& A, const ComplexFuzzySet& B);

std::optional<std::string> intersection_hypothesis_gap(const LieAlgebra& L, std::span<const ComplexFuzzySet> sets,
                                                       Mode mode);
/// For sets that each pass the mode's predicate and are pairwise mutually
/// homogeneous: OK iff their intersection is homogeneous and passes the predicate.
/// Throws PreconditionError naming the unmet hypothesis, std::invalid_argument for an empty list.
CheckResult check_intersection_theorems(const LieAlgebra& L, std::span<const ComplexFuzzySet> sets, Mode mode);
CheckResult intersection_conclusion(const LieAlgebra& L, std::span<const ComplexFuzzySet> sets, Mode mode);

}  // namespace cfla

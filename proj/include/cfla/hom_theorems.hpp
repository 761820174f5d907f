#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cfla/check_result.hpp"
#include "cfla/fuzzy_set.hpp"
#include "cfla/hom.hpp"
#include "cfla/levels.hpp"

namespace cfla {

enum class HomTheorem { preimage_subalgebra, preimage_ideal, image_subalgebra, image_ideal, sum_commutation };

std::string_view to_string(HomTheorem t);
/// Accepts the to_string spellings; nullopt for anything else.
std::optional<HomTheorem> parse_hom_theorem(std::string_view text);

/// `a` is the set on the target for the preimage theorems and on the source
/// otherwise; `b` is the second summand for sum_commutation.
std::optional<std::string> hom_hypothesis_gap(HomTheorem which, const LieHom& phi, const ComplexFuzzySet& a,
                                              const ComplexFuzzySet* b = nullptr);
/// The conclusion alone: the transported set passes the predicate, or
/// phi(A+B) and phi(A)+phi(B) agree at every target element.
CheckResult hom_theorem_conclusion(HomTheorem which, const LieHom& phi, const ComplexFuzzySet& a,
                                   const ComplexFuzzySet* b = nullptr);
/// Hypotheses first (PreconditionError naming the unmet one), then the conclusion.
CheckResult check_hom_theorem(HomTheorem which, const LieHom& phi, const ComplexFuzzySet& a,
                              const ComplexFuzzySet* b = nullptr);

/// OK iff phi^{-1}(cut of B) equals the cut of phi^{-1}(B) as element sets.
/// Throws PreconditionError for an invalid hom.
CheckResult check_levelcut_commutation(const LieHom& phi, const ComplexFuzzySet& B, const LevelSpec& spec);

}  // namespace cfla

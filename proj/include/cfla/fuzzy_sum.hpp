#pragma once

#include "cfla/fuzzy_set.hpp"
#include "cfla/lie_algebra.hpp"

namespace cfla {

/// mu_{A+B}(x) = sup over x = a + b of mu_A(a) ∧ mu_B(b), with sup and ∧ taken
/// componentwise over all p^n decompositions. Throws CarrierMismatch.
ComplexFuzzySet fuzzy_sum(const LieAlgebra& L, const ComplexFuzzySet& A, const ComplexFuzzySet& B);
ComplexFuzzySet fuzzy_sum(const ComplexFuzzySet& A, const ComplexFuzzySet& B);

/// True when, for every x, some single decomposition x = a + b attains
/// mu_{A+B}(x) exactly (the supremum is a maximum).
bool sum_attains_supremum(const ComplexFuzzySet& A, const ComplexFuzzySet& B, const ComplexFuzzySet& sum);

}  // namespace cfla

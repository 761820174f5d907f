#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "cfla/carrier.hpp"
#include "cfla/check_result.hpp"
#include "cfla/codebook.hpp"
#include "cfla/fuzzy_set.hpp"
#include "cfla/lie_algebra.hpp"

namespace cfla {

enum class Mode { subalgebra, ideal };
std::string_view to_string(Mode m);

/// Which closure inequality failed:
///   scalar         mu(a x) >= mu(x)
///   sum            mu(x + y) >= mu(x) ∧ mu(y)
///   bracket        mu([x, y]) >= mu(x) ∧ mu(y)
///   bracket_ideal  mu([x, y]) >= mu(x)   (with the scalar condition this is the ∨ form)
enum class Condition { scalar, sum, bracket, bracket_ideal };
std::string_view to_string(Condition c);

struct ClosureViolation {
  Condition condition;
  std::size_t x;
  std::size_t y;       // partner for sum/bracket; unused for scalar
  int scalar = 0;      // scalar condition only
  std::size_t result;  // a x, x + y or [x, y]
};

/// Exhaustive closure scan over order codes (one code per carrier index).
///
/// Conditions are scanned in the order scalar, sum, bracket; inside each, x then
/// y (or the scalar) follow the carrier's scan order. The first violation found
/// is returned, so witnesses are deterministic.
std::optional<ClosureViolation> find_closure_violation(const LieAlgebra& L, const Carrier& C,
                                                       std::span<const Code> codes, Mode mode);

/// NOT_HOMOGENEOUS if A is not homogeneous, else OK iff the three closure
/// conditions hold for all x, y in L and all scalars. Throws CarrierMismatch.
CheckResult is_complex_fuzzy_subalgebra(const LieAlgebra& L, const ComplexFuzzySet& A);
/// As above with the bracket condition mu([x, y]) >= mu(x) ∨ mu(y).
CheckResult is_complex_fuzzy_ideal(const LieAlgebra& L, const ComplexFuzzySet& A);
CheckResult is_complex_fuzzy(const LieAlgebra& L, const ComplexFuzzySet& A, Mode mode);

/// Scalar versions over [0, 1] and [0, 2pi]; no homogeneity requirement.
CheckResult is_real_fuzzy_subalgebra(const LieAlgebra& L, const RealFuzzySet& F);
CheckResult is_real_fuzzy_ideal(const LieAlgebra& L, const RealFuzzySet& F);
CheckResult is_pi_fuzzy_subalgebra(const LieAlgebra& L, const PiFuzzySet& G);
CheckResult is_pi_fuzzy_ideal(const LieAlgebra& L, const PiFuzzySet& G);
CheckResult is_real_fuzzy(const LieAlgebra& L, const RealFuzzySet& F, Mode mode);
CheckResult is_pi_fuzzy(const LieAlgebra& L, const PiFuzzySet& G, Mode mode);

/// Verifies, for a complex fuzzy subalgebra A:
///   (i)   mu(-x) = mu(x)
///   (ii)  mu(x - y) = mu(0)  =>  mu(x) = mu(y)
///   (iii) mu(x) < mu(y)      =>  mu(x - y) = mu(x) = mu(y - x)
/// Throws PreconditionError when A is not a complex fuzzy subalgebra of L.
CheckResult check_negation_lemma(const LieAlgebra& L, const ComplexFuzzySet& A);

}  // namespace cfla

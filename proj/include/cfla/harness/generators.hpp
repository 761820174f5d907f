#pragma once

#include <cstddef>
#include <vector>

#include "cfla/carrier.hpp"
#include "cfla/crisp.hpp"
#include "cfla/fuzzy_set.hpp"
#include "cfla/harness/rng.hpp"
#include "cfla/lie_algebra.hpp"
#include "cfla/predicates.hpp"

namespace cfla::harness {

/// Small-denominator values: amplitudes k/d in [0, 1] and phases k/d in [0, 2].
struct ValueGrid {
  std::vector<Rational> r_values;  // ascending, includes 0
  std::vector<Rational> w_values;

  /// Throws std::invalid_argument unless both bounds are in [1, 64].
  static ValueGrid make(int r_max_denominator, int w_max_denominator);
  /// Longest strictly decreasing positive chain the grid supports.
  std::size_t max_chain() const;
};

/// An algebra with its carrier and crisp subalgebra and ideal lattices.
struct AlgebraContext {
  LieAlgebra algebra;
  Carrier carrier;
  std::vector<CrispSubset> subalgebras;
  std::vector<CrispSubset> ideals;

  explicit AlgebraContext(const LieAlgebra& L);
  const std::vector<CrispSubset>& crisp(Mode m) const { return m == Mode::subalgebra ? subalgebras : ideals; }
};

/// n values, strictly decreasing in both components, all above (0, 0).
std::vector<Membership> draw_value_chain(Rng& rng, const ValueGrid& grid, std::size_t n);

/// Strictly nested chain of 1 to max_len members of `pool`.
std::vector<CrispSubset> draw_crisp_chain(Rng& rng, const std::vector<CrispSubset>& pool, std::size_t max_len);

/// A valid complex fuzzy subalgebra or ideal generated from a crisp chain.
ComplexFuzzySet draw_chain_set(Rng& rng, const AlgebraContext& ctx, const ValueGrid& grid, Mode mode);
/// As draw_chain_set with values taken, in order, from a subsequence of `values`.
ComplexFuzzySet draw_chain_set(Rng& rng, const AlgebraContext& ctx, const std::vector<Membership>& values, Mode mode);

/// Reassigns one to three elements a value already present in A, or (0, 0).
/// The result stays homogeneous and usually breaks closure.
ComplexFuzzySet perturb(Rng& rng, const ComplexFuzzySet& A);

/// Homogeneous set: a chain set or, half the time, a perturbed one.
ComplexFuzzySet draw_homogeneous_set(Rng& rng, const AlgebraContext& ctx, const ValueGrid& grid, Mode mode);

/// Amplitudes for the pi-scaling checks: chain-generated, perturbed or uniform grid noise.
RealFuzzySet draw_real_set(Rng& rng, const AlgebraContext& ctx, const ValueGrid& grid);

/// `count` chain sets in `mode` whose values share one chain, hence pairwise mutually homogeneous.
std::vector<ComplexFuzzySet> draw_mutual_family(Rng& rng, const AlgebraContext& ctx, const ValueGrid& grid, Mode mode,
                                                std::size_t count);

}  // namespace cfla::harness

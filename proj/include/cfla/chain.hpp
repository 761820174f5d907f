#pragma once

#include <vector>

#include "cfla/crisp.hpp"
#include "cfla/fuzzy_set.hpp"
#include "cfla/lie_algebra.hpp"
#include "cfla/membership.hpp"
#include "cfla/predicates.hpp"

namespace cfla {

/// A nested chain S_1 ⊂ S_2 ⊂ ... ⊂ S_k of crisp subalgebras (or ideals) with
/// values m_1 > m_2 > ... > m_k. Values must decrease strictly in both the
/// amplitude and the phase, otherwise the generated set is not homogeneous.
struct ChainSpec {
  std::vector<CrispSubset> chain;
  std::vector<Membership> values;
  Mode mode = Mode::subalgebra;
};

/// mu(x) = m_i for the smallest i with x in S_i, and (0, 0) outside S_k.
/// Throws std::invalid_argument when the chain is not strictly nested, a member
/// fails the crisp predicate, or the values are not strictly decreasing
/// (including against (0, 0) when S_k is a proper subset).
ComplexFuzzySet generate_from_chain(const LieAlgebra& L, const ChainSpec& spec);

}  // namespace cfla

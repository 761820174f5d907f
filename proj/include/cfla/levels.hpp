#pragma once

#include <vector>

#include "cfla/crisp.hpp"
#include "cfla/fuzzy_set.hpp"
#include "cfla/membership.hpp"

namespace cfla {

/// U(mu, t) = {x : mu(x) >= t} in the componentwise order.
CrispSubset upper_level(const ComplexFuzzySet& A, const Membership& t);
/// {x : mu(x) >= t and mu(x) != t}.
CrispSubset strong_upper_level(const ComplexFuzzySet& A, const Membership& t);

/// Distinct values of mu sorted ascending. Throws NotHomogeneousError if two values are incomparable.
std::vector<Membership> image_values(const ComplexFuzzySet& A);

/// Thresholds for the (alpha, beta) cuts; each flag makes its comparison strict.
struct LevelSpec {
  Rational alpha{0};
  Rational beta_over_pi{0};
  bool strict_r = false;
  bool strict_w = false;
};

/// {x : r(x) >= alpha and w(x) >= beta}, with > in place of >= per strict flag.
/// Throws std::out_of_range when alpha is outside [0, 1] or beta_over_pi outside [0, 2].
CrispSubset level_cut(const ComplexFuzzySet& A, const LevelSpec& spec);
bool in_level_cut(const Membership& m, const LevelSpec& spec);

}  // namespace cfla

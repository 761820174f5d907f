#include "cfla/levels.hpp"

#include <algorithm>
#include <stdexcept>

#include "cfla/errors.hpp"

namespace cfla {

namespace {

template <class Pred>
CrispSubset select(const ComplexFuzzySet& A, Pred keep) {
  const Carrier C(A.p(), A.dim(), A.size());
  std::vector<std::uint32_t> members;
  for (std::size_t i = 0; i < A.size(); ++i)
    if (keep(A[i])) members.push_back(static_cast<std::uint32_t>(i));
  return CrispSubset(C, std::move(members));
}

}  // namespace

CrispSubset upper_level(const ComplexFuzzySet& A, const Membership& t) {
  return select(A, [&](const Membership& m) { return geq(m, t); });
}

CrispSubset strong_upper_level(const ComplexFuzzySet& A, const Membership& t) {
  return select(A, [&](const Membership& m) { return gt(m, t); });
}

std::vector<Membership> image_values(const ComplexFuzzySet& A) {
  std::vector<Membership> out;
  for (const auto& m : A.values())
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (cmp_membership(out[i], out[j]) == Order::incomparable) {
        throw NotHomogeneousError("membership values " + to_string(out[i]) + " and " + to_string(out[j]) +
                                  " are incomparable");
      }
  std::sort(out.begin(), out.end(), [](const Membership& a, const Membership& b) { return gt(b, a); });
  return out;
}

bool in_level_cut(const Membership& m, const LevelSpec& spec) {
  const bool r_ok = spec.strict_r ? m.r() > spec.alpha : m.r() >= spec.alpha;
  const bool w_ok = spec.strict_w ? m.w_over_pi() > spec.beta_over_pi : m.w_over_pi() >= spec.beta_over_pi;
  return r_ok && w_ok;
}

CrispSubset level_cut(const ComplexFuzzySet& A, const LevelSpec& spec) {
  if (spec.alpha < 0 || spec.alpha > 1) throw std::out_of_range("alpha outside [0, 1]");
  if (spec.beta_over_pi < 0 || spec.beta_over_pi > 2) throw std::out_of_range("beta outside [0, 2pi]");
  return select(A, [&](const Membership& m) { return in_level_cut(m, spec); });
}

}  // namespace cfla

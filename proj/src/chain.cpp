#include "cfla/chain.hpp"

#include <stdexcept>
#include <string>

namespace cfla {

namespace {

bool strictly_below(const Membership& a, const Membership& b) {
  return a.r() < b.r() && a.w_over_pi() < b.w_over_pi();
}

}  // namespace

ComplexFuzzySet generate_from_chain(const LieAlgebra& L, const ChainSpec& spec) {
  if (spec.chain.empty()) throw std::invalid_argument("chain is empty");
  if (spec.chain.size() != spec.values.size()) throw std::invalid_argument("chain and value lists differ in length");
  const Carrier C(L);
  for (std::size_t i = 0; i < spec.chain.size(); ++i) {
    const auto& S = spec.chain[i];
    if (S.p() != L.p() || S.dim() != L.dim()) throw std::invalid_argument("chain member is not on the algebra's carrier");
    if (S.empty()) throw std::invalid_argument("chain member " + std::to_string(i) + " is empty");
    if (i > 0 && (!spec.chain[i - 1].subset_of(S) || spec.chain[i - 1].size() == S.size())) {
      throw std::invalid_argument("chain is not strictly nested at position " + std::to_string(i));
    }
    if (i > 0 && !strictly_below(spec.values[i], spec.values[i - 1])) {
      throw std::invalid_argument("chain values are not strictly decreasing at position " + std::to_string(i));
    }
    const auto crisp = spec.mode == Mode::subalgebra ? is_crisp_subalgebra(L, S) : is_crisp_ideal(L, S);
    if (!crisp.ok()) {
      throw std::invalid_argument("chain member " + std::to_string(i) + " is not a crisp " +
                                  std::string(to_string(spec.mode)) + ": " + describe(crisp));
    }
  }
  const auto& last = spec.values.back();
  if (spec.chain.back().size() != C.size() && !(last == Membership::zero()) &&
      !strictly_below(Membership::zero(), last)) {
    throw std::invalid_argument("last chain value is not strictly above the (0, 0) assigned outside the chain");
  }

  std::vector<Membership> values(C.size(), Membership::zero());
  for (std::size_t i = spec.chain.size(); i-- > 0;) {
    for (auto idx : spec.chain[i].indices()) values[idx] = spec.values[i];
  }
  return {C, std::move(values)};
}

}  // namespace cfla

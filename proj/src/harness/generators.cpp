#include "cfla/harness/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cfla/chain.hpp"

namespace cfla::harness {

std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream, std::uint64_t index) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : stream) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed) ^ h) ^ index);
}

ValueGrid ValueGrid::make(int r_max_denominator, int w_max_denominator) {
  if (r_max_denominator < 1 || r_max_denominator > 64 || w_max_denominator < 1 || w_max_denominator > 64) {
    throw std::invalid_argument("value-grid denominators must be in [1, 64]");
  }
  std::set<Rational> r;
  std::set<Rational> w;
  for (int d = 1; d <= r_max_denominator; ++d)
    for (int k = 0; k <= d; ++k) r.insert(Rational(k, d));
  for (int d = 1; d <= w_max_denominator; ++d)
    for (int k = 0; k <= 2 * d; ++k) w.insert(Rational(k, d));
  return {{r.begin(), r.end()}, {w.begin(), w.end()}};
}

std::size_t ValueGrid::max_chain() const { return std::min(r_values.size(), w_values.size()) - 1; }

AlgebraContext::AlgebraContext(const LieAlgebra& L)
    : algebra(L), carrier(L), subalgebras(crisp_subalgebras(L)), ideals(crisp_ideals(L)) {}

namespace {

// k distinct positive entries of an ascending list, in descending order.
std::vector<Rational> draw_positive_desc(Rng& rng, const std::vector<Rational>& values, std::size_t k) {
  std::vector<Rational> positive(values.begin() + 1, values.end());
  rng.shuffle(positive);
  positive.resize(k);
  std::sort(positive.begin(), positive.end(), std::greater<>());
  return positive;
}

ComplexFuzzySet from_chain(const AlgebraContext& ctx, std::vector<CrispSubset> chain, std::vector<Membership> values,
                           Mode mode) {
  return generate_from_chain(ctx.algebra, ChainSpec{std::move(chain), std::move(values), mode});
}

}  // namespace

std::vector<Membership> draw_value_chain(Rng& rng, const ValueGrid& grid, std::size_t n) {
  if (n > grid.max_chain()) throw std::invalid_argument("value grid too coarse for the requested chain");
  const auto r = draw_positive_desc(rng, grid.r_values, n);
  const auto w = draw_positive_desc(rng, grid.w_values, n);
  std::vector<Membership> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(r[i], w[i]);
  return out;
}

std::vector<CrispSubset> draw_crisp_chain(Rng& rng, const std::vector<CrispSubset>& pool, std::size_t max_len) {
  const std::size_t len = 1 + static_cast<std::size_t>(rng.below(max_len));
  std::vector<CrispSubset> chain{rng.pick(pool)};
  while (chain.size() < len) {
    std::vector<CrispSubset> bigger;
    for (const auto& s : pool)
      if (s.size() > chain.back().size() && chain.back().subset_of(s)) bigger.push_back(s);
    if (bigger.empty()) break;
    chain.push_back(rng.pick(bigger));
  }
  return chain;
}

ComplexFuzzySet draw_chain_set(Rng& rng, const AlgebraContext& ctx, const ValueGrid& grid, Mode mode) {
  auto chain = draw_crisp_chain(rng, ctx.crisp(mode), std::min<std::size_t>(3, grid.max_chain()));
  auto values = draw_value_chain(rng, grid, chain.size());
  return from_chain(ctx, std::move(chain), std::move(values), mode);
}

ComplexFuzzySet draw_chain_set(Rng& rng, const AlgebraContext& ctx, const std::vector<Membership>& values, Mode mode) {
  auto chain = draw_crisp_chain(rng, ctx.crisp(mode), std::min<std::size_t>(3, values.size()));
  std::vector<std::size_t> picks(values.size());
  for (std::size_t i = 0; i < picks.size(); ++i) picks[i] = i;
  rng.shuffle(picks);
  picks.resize(chain.size());
  std::sort(picks.begin(), picks.end());
  std::vector<Membership> chosen;
  for (auto i : picks) chosen.push_back(values[i]);
  return from_chain(ctx, std::move(chain), std::move(chosen), mode);
}

ComplexFuzzySet perturb(Rng& rng, const ComplexFuzzySet& A) {
  std::vector<Membership> palette{Membership::zero()};
  for (const auto& v : A.values())
    if (std::find(palette.begin(), palette.end(), v) == palette.end()) palette.push_back(v);
  std::vector<Membership> values(A.values().begin(), A.values().end());
  const int changes = rng.between(1, 3);
  for (int i = 0; i < changes; ++i) values[static_cast<std::size_t>(rng.below(values.size()))] = rng.pick(palette);
  return {Carrier(A.p(), A.dim()), std::move(values)};
}

ComplexFuzzySet draw_homogeneous_set(Rng& rng, const AlgebraContext& ctx, const ValueGrid& grid, Mode mode) {
  auto A = draw_chain_set(rng, ctx, grid, mode);
  return rng.coin() ? perturb(rng, A) : A;
}

RealFuzzySet draw_real_set(Rng& rng, const AlgebraContext& ctx, const ValueGrid& grid) {
  switch (rng.below(3)) {
    case 0:
      return decompose(draw_chain_set(rng, ctx, grid, rng.coin() ? Mode::subalgebra : Mode::ideal)).first;
    case 1:
      return decompose(perturb(rng, draw_chain_set(rng, ctx, grid, rng.coin() ? Mode::subalgebra : Mode::ideal))).first;
    default: {
      std::vector<Rational> values;
      for (std::size_t i = 0; i < ctx.carrier.size(); ++i) values.push_back(rng.pick(grid.r_values));
      return {ctx.carrier, std::move(values)};
    }
  }
}

std::vector<ComplexFuzzySet> draw_mutual_family(Rng& rng, const AlgebraContext& ctx, const ValueGrid& grid, Mode mode,
                                                std::size_t count) {
  const auto shared = draw_value_chain(rng, grid, std::min<std::size_t>(5, grid.max_chain()));
  std::vector<ComplexFuzzySet> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(draw_chain_set(rng, ctx, shared, mode));
  return out;
}

}  // namespace cfla::harness

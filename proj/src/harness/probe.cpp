#include "cfla/harness/probe.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>

#include "cfla/catalog.hpp"
#include "cfla/harness/checks.hpp"
#include "cfla/harness/generators.hpp"
#include "cfla/hom.hpp"

namespace cfla::harness {

namespace {

struct Candidate {
  Scenario scenario;
  CheckSpec conclusion;
};

struct ProbeEnv {
  ValueGrid grid;
  std::vector<std::unique_ptr<AlgebraContext>> entries;
  std::map<std::string, std::unique_ptr<AlgebraContext>> hom_contexts;
  std::vector<LieHom> surjective;
  std::vector<LieHom> non_surjective;

  const AlgebraContext& context(const LieAlgebra& L) {
    auto& slot = hom_contexts[L.name() + "/" + std::to_string(L.p())];
    if (!slot) slot = std::make_unique<AlgebraContext>(L);
    return *slot;
  }
};

std::vector<ComplexFuzzySet> independent_family(Rng& rng, const AlgebraContext& ctx, const ValueGrid& grid, Mode mode,
                                                std::size_t count) {
  std::vector<ComplexFuzzySet> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(draw_chain_set(rng, ctx, grid, mode));
  return out;
}

Candidate on_algebra(const std::string& op, const LieAlgebra& L, std::vector<ComplexFuzzySet> sets) {
  Candidate c;
  c.conclusion.op = op;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::string name(1, static_cast<char>('A' + i));
    c.scenario.add_fuzzy_set(name, L, std::move(sets[i]));
    c.conclusion.args.push_back(name);
  }
  return c;
}

Candidate on_hom(const std::string& op, const LieHom& phi, const LieAlgebra& on, std::vector<ComplexFuzzySet> sets) {
  Candidate c = on_algebra(op, on, std::move(sets));
  c.scenario.add_hom(phi);
  c.conclusion.args.insert(c.conclusion.args.begin(), phi.name());
  return c;
}

Mode mode_suffix(const std::string& id) { return id.ends_with("/ideal") || id.ends_with("-ideal") ? Mode::ideal : Mode::subalgebra; }

}  // namespace

std::vector<std::pair<std::string, std::string>> droppable_hypotheses() {
  return {
      {"sum-ideal", "mutual-homogeneity"},
      {"intersection-pair/subalgebra", "mutual-homogeneity"},
      {"intersection-pair/ideal", "mutual-homogeneity"},
      {"intersection-family/subalgebra", "mutual-homogeneity"},
      {"intersection-family/ideal", "mutual-homogeneity"},
      {"image-subalgebra", "surjectivity"},
      {"image-ideal", "surjectivity"},
      {"hom-sum-commutation", "surjectivity"},
      {"hom-sum-commutation", "mutual-homogeneity"},
  };
}

ProbeResult find_hypothesis_counterexample(const ProbeRequest& request) {
  const auto ids = theorem_ids();
  if (std::find(ids.begin(), ids.end(), request.theorem) == ids.end()) {
    throw std::invalid_argument("unknown theorem '" + request.theorem + "'");
  }
  const auto pairs = droppable_hypotheses();
  if (std::find(pairs.begin(), pairs.end(), std::pair{request.theorem, request.drop}) == pairs.end()) {
    throw std::invalid_argument("hypothesis '" + request.drop + "' is not droppable for '" + request.theorem + "'");
  }
  if (request.catalog.empty()) throw std::invalid_argument("catalog is empty");

  ProbeEnv env;
  env.grid = ValueGrid::make(request.r_max_denominator, request.w_max_denominator);
  std::vector<int> primes;
  for (const auto& e : request.catalog) {
    env.entries.push_back(std::make_unique<AlgebraContext>(make_catalog_algebra(e.name, e.p)));
    if (std::find(primes.begin(), primes.end(), e.p) == primes.end()) primes.push_back(e.p);
  }
  std::sort(primes.begin(), primes.end());
  for (int p : primes) {
    for (auto& h : catalog_homs(p)) (h.surjective() ? env.surjective : env.non_surjective).push_back(std::move(h));
  }

  const auto& id = request.theorem;
  const bool drop_surjectivity = request.drop == "surjectivity";
  const auto& homs = drop_surjectivity ? env.non_surjective : env.surjective;

  ProbeResult result;
  result.theorem = id;
  result.drop = request.drop;
  for (std::uint64_t t = 0; t < request.budget; ++t) {
    Rng rng(derive_seed(request.seed, "probe/" + id + "/" + request.drop, t));
    const auto& ctx = *env.entries[static_cast<std::size_t>(t % env.entries.size())];
    Candidate c;
    if (id == "sum-ideal") {
      c = on_algebra("sum-ideal-conclusion", ctx.algebra, independent_family(rng, ctx, env.grid, Mode::ideal, 2));
    } else if (id.starts_with("intersection-")) {
      const std::size_t count = id.starts_with("intersection-pair") ? 2 : static_cast<std::size_t>(rng.between(3, 4));
      const auto mode = mode_suffix(id);
      c = on_algebra("intersection-conclusion/" + std::string(to_string(mode)), ctx.algebra,
                     independent_family(rng, ctx, env.grid, mode, count));
    } else {
      if (homs.empty()) break;
      const auto& phi = homs[static_cast<std::size_t>(t % homs.size())];
      const auto& src = env.context(phi.source());
      if (id == "hom-sum-commutation") {
        auto sets = drop_surjectivity ? draw_mutual_family(rng, src, env.grid, Mode::ideal, 2)
                                      : independent_family(rng, src, env.grid, Mode::ideal, 2);
        c = on_hom("hom-sum-commutation-conclusion", phi, src.algebra, std::move(sets));
      } else {
        c = on_hom(id + "-conclusion", phi, src.algebra, {draw_chain_set(rng, src, env.grid, mode_suffix(id))});
      }
    }
    ++result.attempts;
    auto verdict = evaluate_check(c.scenario, c.conclusion);
    if (!verdict.ok()) {
      c.conclusion.expect = verdict.verdict;
      c.scenario.checks = {c.conclusion};
      result.instance = std::move(c.scenario);
      result.conclusion = std::move(verdict);
      break;
    }
  }
  return result;
}

ordered_json ProbeResult::to_json() const {
  ordered_json j;
  j["theorem"] = theorem;
  j["drop"] = drop;
  j["attempts"] = attempts;
  j["result"] = found() ? "FOUND" : "NOT_FOUND";
  if (conclusion) j["conclusion"] = harness::to_json(*conclusion);
  if (instance) j["scenario"] = harness::to_json(*instance);
  return j;
}

}  // namespace cfla::harness

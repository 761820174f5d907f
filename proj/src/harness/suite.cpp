#include "cfla/harness/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <thread>

#include "cfla/catalog.hpp"
#include "cfla/field.hpp"
#include "cfla/harness/checks.hpp"
#include "cfla/harness/generators.hpp"
#include "cfla/hom.hpp"

namespace cfla::harness {

CatalogEntry CatalogEntry::parse(const std::string& label) {
  const auto slash = label.rfind('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == label.size()) {
    throw std::invalid_argument("catalog entry '" + label + "' is not <name>/<p>");
  }
  CatalogEntry e;
  e.name = label.substr(0, slash);
  try {
    std::size_t used = 0;
    e.p = std::stoi(label.substr(slash + 1), &used);
    if (used != label.size() - slash - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("catalog entry '" + label + "' has a malformed prime");
  }
  return e;
}

std::vector<CatalogEntry> default_catalog() {
  return {{"abelian-2", 3}, {"abelian-3", 3}, {"cross3", 3}, {"heisenberg3", 3}, {"sl2", 3}};
}

namespace {

struct Instance {
  Scenario scenario;
  CheckSpec check;
  bool exhausted = false;
};

struct SuiteEnv {
  ValueGrid grid;
  std::vector<const AlgebraContext*> entries;
  std::map<std::string, std::unique_ptr<AlgebraContext>> contexts;
  std::vector<LieHom> homs;
  std::vector<LieHom> surjective;

  const AlgebraContext& context(const LieAlgebra& L) const {
    return *contexts.at(L.name() + "/" + std::to_string(L.p()));
  }
  const AlgebraContext& entry(std::uint64_t t) const { return *entries[static_cast<std::size_t>(t % entries.size())]; }
};

const AlgebraContext& add_context(SuiteEnv& env, const LieAlgebra& L) {
  auto& slot = env.contexts[L.name() + "/" + std::to_string(L.p())];
  if (!slot) slot = std::make_unique<AlgebraContext>(L);
  return *slot;
}

SuiteEnv make_env(const GenConfig& config) {
  SuiteEnv env;
  env.grid = ValueGrid::make(config.r_max_denominator, config.w_max_denominator);
  std::vector<int> primes;
  for (const auto& e : config.catalog) {
    env.entries.push_back(&add_context(env, make_catalog_algebra(e.name, e.p)));
    if (std::find(primes.begin(), primes.end(), e.p) == primes.end()) primes.push_back(e.p);
  }
  std::sort(primes.begin(), primes.end());
  for (int p : primes) {
    for (auto& h : catalog_homs(p)) {
      if (h.source().dim() > config.max_dim || h.target().dim() > config.max_dim) continue;
      add_context(env, h.source());
      add_context(env, h.target());
      if (h.surjective()) env.surjective.push_back(h);
      env.homs.push_back(std::move(h));
    }
  }
  return env;
}

Mode pick_mode(Rng& rng) { return rng.coin() ? Mode::subalgebra : Mode::ideal; }

Instance single(const std::string& op, const LieAlgebra& L, ComplexFuzzySet A) {
  Instance in;
  in.scenario.add_fuzzy_set("A", L, std::move(A));
  in.check = {op, {"A"}, Verdict::ok};
  return in;
}

Instance family(const std::string& op, const LieAlgebra& L, std::vector<ComplexFuzzySet> sets) {
  Instance in;
  in.check = {op, {}, Verdict::ok};
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::string name(1, static_cast<char>('A' + i));
    in.scenario.add_fuzzy_set(name, L, std::move(sets[i]));
    in.check.args.push_back(name);
  }
  return in;
}

Instance with_hom(const std::string& op, const LieHom& phi, const LieAlgebra& on, std::vector<ComplexFuzzySet> sets) {
  Instance in;
  in.scenario.add_hom(phi);
  in.check = {op, {phi.name()}, Verdict::ok};
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::string name(1, static_cast<char>('A' + i));
    in.scenario.add_fuzzy_set(name, on, std::move(sets[i]));
    in.check.args.push_back(name);
  }
  return in;
}

enum class HomPool { none, all, surjective };

struct TheoremDef {
  std::string id;
  HomPool pool = HomPool::none;
  // t is the instance index; for hom theorems phi is the hom for this instance.
  std::function<Instance(const SuiteEnv&, Rng&, std::uint64_t t, const LieHom* phi)> make;
};

std::vector<TheoremDef> theorem_defs() {
  std::vector<TheoremDef> defs;
  for (auto mode : {Mode::subalgebra, Mode::ideal}) {
    const std::string id = "pi-scaling/" + std::string(to_string(mode));
    defs.push_back({id, HomPool::none, [id](const SuiteEnv& env, Rng& rng, std::uint64_t t, const LieHom*) {
                      const auto& ctx = env.entry(t);
                      const auto F = draw_real_set(rng, ctx, env.grid);
                      std::vector<Membership> values;
                      for (const auto& v : F.values()) values.emplace_back(v, Rational(0));
                      return single(id, ctx.algebra, ComplexFuzzySet(ctx.carrier, std::move(values)));
                    }});
  }
  for (auto mode : {Mode::subalgebra, Mode::ideal}) {
    const std::string id = "decomposition/" + std::string(to_string(mode));
    defs.push_back({id, HomPool::none, [id, mode](const SuiteEnv& env, Rng& rng, std::uint64_t t, const LieHom*) {
                      const auto& ctx = env.entry(t);
                      return single(id, ctx.algebra, draw_homogeneous_set(rng, ctx, env.grid, mode));
                    }});
  }
  for (auto mode : {Mode::subalgebra, Mode::ideal}) {
    for (const char* strength : {"upper", "strong"}) {
      const std::string id = "level/" + std::string(to_string(mode)) + "/" + strength;
      defs.push_back({id, HomPool::none, [id, mode](const SuiteEnv& env, Rng& rng, std::uint64_t t, const LieHom*) {
                        const auto& ctx = env.entry(t);
                        return single(id, ctx.algebra, draw_homogeneous_set(rng, ctx, env.grid, mode));
                      }});
    }
  }
  defs.push_back({"negation-lemma", HomPool::none, [](const SuiteEnv& env, Rng& rng, std::uint64_t t, const LieHom*) {
                    const auto& ctx = env.entry(t);
                    return single("negation-lemma", ctx.algebra, draw_chain_set(rng, ctx, env.grid, Mode::subalgebra));
                  }});
  defs.push_back({"sum-ideal", HomPool::none, [](const SuiteEnv& env, Rng& rng, std::uint64_t t, const LieHom*) {
                    const auto& ctx = env.entry(t);
                    return family("sum-ideal", ctx.algebra, draw_mutual_family(rng, ctx, env.grid, Mode::ideal, 2));
                  }});
  for (const char* kind : {"pair", "family"}) {
    for (auto mode : {Mode::subalgebra, Mode::ideal}) {
      const std::string id = std::string("intersection-") + kind + "/" + std::string(to_string(mode));
      const bool pair = std::string(kind) == "pair";
      defs.push_back({id, HomPool::none, [id, mode, pair](const SuiteEnv& env, Rng& rng, std::uint64_t t, const LieHom*) {
                        const auto& ctx = env.entry(t);
                        const std::size_t count = pair ? 2 : static_cast<std::size_t>(rng.between(3, 4));
                        return family(id, ctx.algebra, draw_mutual_family(rng, ctx, env.grid, mode, count));
                      }});
    }
  }
  for (auto mode : {Mode::subalgebra, Mode::ideal}) {
    const std::string id = "preimage-" + std::string(to_string(mode));
    defs.push_back({id, HomPool::all, [id, mode](const SuiteEnv& env, Rng& rng, std::uint64_t, const LieHom* phi) {
                      const auto& ctx = env.context(phi->target());
                      return with_hom(id, *phi, ctx.algebra, {draw_chain_set(rng, ctx, env.grid, mode)});
                    }});
  }
  for (auto mode : {Mode::subalgebra, Mode::ideal}) {
    const std::string id = "image-" + std::string(to_string(mode));
    defs.push_back({id, HomPool::surjective, [id, mode](const SuiteEnv& env, Rng& rng, std::uint64_t, const LieHom* phi) {
                      const auto& ctx = env.context(phi->source());
                      return with_hom(id, *phi, ctx.algebra, {draw_chain_set(rng, ctx, env.grid, mode)});
                    }});
  }
  defs.push_back({"hom-sum-commutation", HomPool::surjective,
                  [](const SuiteEnv& env, Rng& rng, std::uint64_t, const LieHom* phi) {
                    const auto& ctx = env.context(phi->source());
                    return with_hom("hom-sum-commutation", *phi, ctx.algebra,
                                    draw_mutual_family(rng, ctx, env.grid, Mode::ideal, 2));
                  }});
  for (const char* r : {"ge", "gt"}) {
    for (const char* w : {"ge", "gt"}) {
      const std::string id = std::string("levelcut/") + r + "-" + w;
      defs.push_back({id, HomPool::all, [id](const SuiteEnv& env, Rng& rng, std::uint64_t, const LieHom* phi) {
                        const auto& ctx = env.context(phi->target());
                        return with_hom(id, *phi, ctx.algebra, {draw_homogeneous_set(rng, ctx, env.grid, pick_mode(rng))});
                      }});
    }
  }
  return defs;
}

bool matches(const std::string& id, const std::string& filter) {
  return id == filter || (id.size() > filter.size() && id.starts_with(filter) && id[filter.size()] == '/');
}

struct TrialResult {
  enum { pass, fail, exhausted } status = pass;
  std::optional<TrialFailure> failure;
};

TrialResult run_instance(const GenConfig& config, const SuiteEnv& env, const TheoremDef& def, std::uint64_t t) {
  const std::uint64_t seed = derive_seed(config.seed, def.id, t);
  Rng rng(seed);
  TrialResult res;
  const LieHom* phi = nullptr;
  if (def.pool != HomPool::none) {
    const auto& pool = def.pool == HomPool::all ? env.homs : env.surjective;
    if (pool.empty()) {
      res.status = TrialResult::exhausted;
      return res;
    }
    phi = &pool[static_cast<std::size_t>(t % pool.size())];
  }
  Instance in;
  ordered_json outcome;
  try {
    in = def.make(env, rng, t, phi);
    const auto out = run_check(in.scenario, in.check);
    if (out.passed) return res;
    outcome = to_json(out);
  } catch (const std::exception& e) {
    outcome = ordered_json{{"error", std::string("generator: ") + e.what()}};
  }
  res.status = TrialResult::fail;
  in.scenario.checks = {in.check};
  res.failure = TrialFailure{t, seed, std::move(outcome), to_json(in.scenario)};
  return res;
}

template <typename F>
void parallel_for(std::uint64_t n, unsigned threads, F&& body) {
  if (threads <= 1 || n < 2) {
    for (std::uint64_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::jthread> pool;
  const auto count = static_cast<unsigned>(std::min<std::uint64_t>(threads, n));
  for (unsigned k = 0; k < count; ++k) {
    pool.emplace_back([&] {
      for (std::uint64_t i = next++; i < n; i = next++) body(i);
    });
  }
}

std::string verdict_of(bool any_fail, bool any_exhausted, std::uint64_t trials) {
  if (any_fail) return "FAIL";
  if (any_exhausted) return "EXHAUSTED";
  if (trials == 0) return "VACUOUS";
  return "PASS";
}

}  // namespace

std::vector<std::string> theorem_ids() {
  std::vector<std::string> ids;
  for (const auto& d : theorem_defs()) ids.push_back(d.id);
  return ids;
}

void validate_config(const GenConfig& config) {
  if (config.trials < 0) throw std::invalid_argument("trials must be non-negative");
  if (config.catalog.empty()) throw std::invalid_argument("catalog is empty");
  if (config.max_p < 2 || config.max_p > 31) throw std::invalid_argument("max p must be in [2, 31]");
  if (config.max_dim < kMinDim || config.max_dim > kMaxDim) throw std::invalid_argument("max dim must be in [1, 4]");
  ValueGrid::make(config.r_max_denominator, config.w_max_denominator);
  for (const auto& e : config.catalog) {
    if (!is_prime(e.p)) throw std::invalid_argument("catalog entry '" + e.label() + "': p is not prime");
    if (e.p > config.max_p) throw std::invalid_argument("catalog entry '" + e.label() + "' exceeds max p");
    const auto L = make_catalog_algebra(e.name, e.p);
    if (L.dim() > config.max_dim) throw std::invalid_argument("catalog entry '" + e.label() + "' exceeds max dim");
    if (L.carrier_size() > kDefaultBudget) {
      throw std::invalid_argument("catalog entry '" + e.label() + "' exceeds the enumeration budget");
    }
  }
  if (config.theorem) {
    const auto ids = theorem_ids();
    if (std::none_of(ids.begin(), ids.end(), [&](const auto& id) { return matches(id, *config.theorem); })) {
      throw std::invalid_argument("unknown theorem '" + *config.theorem + "'");
    }
  }
}

std::string TheoremReport::verdict() const { return verdict_of(failed > 0, exhausted > 0, trials); }

SuiteReport run_suite(const GenConfig& config) {
  validate_config(config);
  SuiteReport report;
  report.config = config;
  if (config.trials > 0) {
    const auto env = make_env(config);
    const unsigned threads = config.threads != 0 ? config.threads : std::max(1U, std::thread::hardware_concurrency());
    for (const auto& def : theorem_defs()) {
      if (config.theorem && !matches(def.id, *config.theorem)) continue;
      TheoremReport tr;
      tr.id = def.id;
      std::uint64_t n = static_cast<std::uint64_t>(config.trials);
      if (def.pool != HomPool::none) {
        tr.homs = (def.pool == HomPool::all ? env.homs : env.surjective).size();
        n *= std::max<std::size_t>(tr.homs, 1);
      }
      std::vector<TrialResult> results(n);
      const auto start = std::chrono::steady_clock::now();
      parallel_for(n, threads, [&](std::uint64_t t) { results[t] = run_instance(config, env, def, t); });
      tr.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      tr.trials = n;
      for (auto& r : results) {
        if (r.status == TrialResult::pass) ++tr.passes;
        else if (r.status == TrialResult::exhausted) ++tr.exhausted;
        else {
          ++tr.failed;
          if (tr.failures.size() < kMaxRecordedFailures) tr.failures.push_back(std::move(*r.failure));
        }
      }
      report.theorems.push_back(std::move(tr));
    }
  }
  bool any_fail = false;
  bool any_exhausted = false;
  std::uint64_t total = 0;
  for (const auto& t : report.theorems) {
    any_fail |= t.failed > 0;
    any_exhausted |= t.exhausted > 0;
    total += t.trials;
  }
  report.overall = verdict_of(any_fail, any_exhausted, total);
  return report;
}

ordered_json SuiteReport::to_json() const {
  ordered_json j;
  j["seed"] = config.seed;
  ordered_json cfg;
  cfg["trials"] = config.trials;
  auto cat = ordered_json::array();
  for (const auto& e : config.catalog) cat.push_back(e.label());
  cfg["catalog"] = std::move(cat);
  cfg["max_p"] = config.max_p;
  cfg["max_dim"] = config.max_dim;
  cfg["r_max_denominator"] = config.r_max_denominator;
  cfg["w_max_denominator"] = config.w_max_denominator;
  cfg["theorem"] = config.theorem ? ordered_json(*config.theorem) : ordered_json(nullptr);
  j["config"] = std::move(cfg);
  auto list = ordered_json::array();
  for (const auto& t : theorems) {
    ordered_json tj;
    tj["id"] = t.id;
    tj["verdict"] = t.verdict();
    tj["trials"] = t.trials;
    tj["passes"] = t.passes;
    tj["failed"] = t.failed;
    tj["exhausted"] = t.exhausted;
    if (t.homs != 0) tj["homs"] = t.homs;
    if (config.timing) tj["wall_ms"] = t.wall_ms;
    auto fails = ordered_json::array();
    for (const auto& f : t.failures) {
      ordered_json fj;
      fj["trial"] = f.trial;
      fj["seed"] = f.seed;
      fj["outcome"] = f.outcome;
      fj["scenario"] = f.scenario;
      fails.push_back(std::move(fj));
    }
    tj["failures"] = std::move(fails);
    list.push_back(std::move(tj));
  }
  j["theorems"] = std::move(list);
  j["overall"] = overall;
  return j;
}

}  // namespace cfla::harness

#include "cfla/harness/cli.hpp"

#include <CLI11.hpp>

#include <fstream>

#include "cfla/errors.hpp"
#include "cfla/fuzzy_sum.hpp"
#include "cfla/harness/checks.hpp"
#include "cfla/harness/probe.hpp"
#include "cfla/harness/scenario.hpp"
#include "cfla/harness/suite.hpp"
#include "cfla/hom.hpp"
#include "cfla/levels.hpp"
#include "cfla/predicates.hpp"

namespace cfla::harness {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::string scenario;
  std::string op;
  std::string set;
  std::string hom;
  std::string a;
  std::string b;
  std::vector<std::string> sets;
  std::string out_file;
  std::string name;
  std::string direction;
  std::string alpha;
  std::string beta;
  bool strict_r = false;
  bool strict_w = false;
  std::uint64_t seed = 1;
  int trials = 50;
  std::string theorem;
  std::vector<std::string> catalog;
  int max_p = GenConfig{}.max_p;
  int max_dim = GenConfig{}.max_dim;
  int r_den = 10;
  int w_den = 4;
  unsigned threads = 0;
  bool timing = false;
  std::string drop;
  std::uint64_t budget = 10000;
};

std::string elements_text(const CrispSubset& S, const Carrier& C) {
  std::string out = "{";
  bool first = true;
  for (const auto& e : S.elements(C)) {
    out += (first ? "" : ", ") + to_string(e);
    first = false;
  }
  return out + "}";
}

ordered_json elements_json(const CrispSubset& S, const Carrier& C) {
  auto arr = ordered_json::array();
  for (const auto& e : S.elements(C)) arr.push_back(to_json(e));
  return arr;
}

void emit_scenario(const Scenario& s, const Options& o, std::ostream& out, const std::string& what) {
  if (o.out_file.empty()) {
    out << to_json(s).dump(2) << '\n';
    return;
  }
  write_scenario(s, o.out_file);
  if (o.json) {
    out << ordered_json{{"wrote", what}, {"file", o.out_file}}.dump(2) << '\n';
  } else {
    out << "wrote " << what << " to " << o.out_file << '\n';
  }
}

int cmd_validate(const Options& o, std::ostream& out) {
  const auto s = load_scenario(o.scenario);
  const auto outcomes = run_checks(s);
  const bool all = std::all_of(outcomes.begin(), outcomes.end(), [](const auto& c) { return c.passed; });
  if (o.json) {
    ordered_json j;
    j["scenario"] = o.scenario;
    j["algebras"] = s.algebras.size();
    j["fuzzy_sets"] = s.fuzzy_sets.size();
    j["homs"] = s.homs.size();
    auto arr = ordered_json::array();
    for (const auto& c : outcomes) arr.push_back(to_json(c));
    j["checks"] = std::move(arr);
    j["passed"] = all;
    out << j.dump(2) << '\n';
  } else {
    out << o.scenario << ": " << s.algebras.size() << " algebras, " << s.fuzzy_sets.size() << " fuzzy sets, "
        << s.homs.size() << " homs, " << s.checks.size() << " checks\n";
    for (const auto& c : outcomes) {
      out << (c.passed ? "PASS " : "FAIL ") << c.spec.op << "(";
      for (std::size_t i = 0; i < c.spec.args.size(); ++i) out << (i ? ", " : "") << c.spec.args[i];
      out << "): " << (c.error ? "ERROR " + *c.error : describe(c.result));
      if (c.spec.expect) out << " expected " << to_string(*c.spec.expect);
      out << '\n';
    }
  }
  return all ? kExitOk : kExitFail;
}

int cmd_check(const Options& o, std::ostream& out) {
  auto s = load_scenario(o.scenario);
  std::string target = o.set;
  const auto& ns = s.fuzzy_set(o.set);
  if (!o.hom.empty()) {
    const auto& phi = s.hom(o.hom);
    if (ns.algebra != phi.target().name()) {
      throw UsageError("set '" + o.set + "' does not live on the target of '" + o.hom + "'");
    }
    target = o.hom + "^-1(" + o.set + ")";
    auto pulled = preimage_cfs(phi, ns.set);
    const auto src = phi.source();
    s.add_fuzzy_set(target, src, std::move(pulled));
  }
  const auto outcome = run_check(s, CheckSpec{o.op, {target}, std::nullopt});
  if (o.json) {
    out << to_json(outcome).dump(2) << '\n';
  } else {
    out << o.op << "(" << target << "): " << (outcome.error ? "ERROR " + *outcome.error : describe(outcome.result))
        << '\n';
  }
  return outcome.passed ? kExitOk : kExitFail;
}

int cmd_sum(const Options& o, std::ostream& out) {
  const auto s = load_scenario(o.scenario);
  const auto& A = s.fuzzy_set(o.a);
  const auto& B = s.fuzzy_set(o.b);
  if (A.algebra != B.algebra) throw UsageError("sets '" + o.a + "' and '" + o.b + "' live on different algebras");
  const auto& L = s.algebra(A.algebra);
  Scenario result;
  const auto name = o.name.empty() ? o.a + "+" + o.b : o.name;
  result.add_fuzzy_set(name, L, fuzzy_sum(L, A.set, B.set));
  emit_scenario(result, o, out, name);
  return kExitOk;
}

int cmd_intersect(const Options& o, std::ostream& out) {
  const auto s = load_scenario(o.scenario);
  std::vector<ComplexFuzzySet> family;
  std::string algebra;
  std::string joined;
  for (const auto& n : o.sets) {
    const auto& f = s.fuzzy_set(n);
    if (!algebra.empty() && f.algebra != algebra) throw UsageError("sets live on different algebras");
    algebra = f.algebra;
    family.push_back(f.set);
    joined += (joined.empty() ? "" : "&") + n;
  }
  Scenario result;
  const auto name = o.name.empty() ? joined : o.name;
  result.add_fuzzy_set(name, s.algebra(algebra), intersect_family(family));
  emit_scenario(result, o, out, name);
  return kExitOk;
}

int cmd_hom(const Options& o, std::ostream& out) {
  const auto s = load_scenario(o.scenario);
  const auto& phi = s.hom(o.hom);
  const auto& f = s.fuzzy_set(o.set);
  Scenario result;
  if (o.direction == "image") {
    if (f.algebra != phi.source().name()) throw UsageError("set '" + o.set + "' is not on the source of '" + o.hom + "'");
    const auto name = o.name.empty() ? o.hom + "(" + o.set + ")" : o.name;
    result.add_fuzzy_set(name, phi.target(), image_cfs(phi, f.set));
    emit_scenario(result, o, out, name);
  } else {
    if (f.algebra != phi.target().name()) throw UsageError("set '" + o.set + "' is not on the target of '" + o.hom + "'");
    const auto name = o.name.empty() ? o.hom + "^-1(" + o.set + ")" : o.name;
    result.add_fuzzy_set(name, phi.source(), preimage_cfs(phi, f.set));
    emit_scenario(result, o, out, name);
  }
  return kExitOk;
}

int cmd_levels(const Options& o, std::ostream& out) {
  const auto s = load_scenario(o.scenario);
  const auto& f = s.fuzzy_set(o.set);
  const auto& L = s.algebra(f.algebra);
  const Carrier C(L);
  if (!o.alpha.empty() || !o.beta.empty() || o.strict_r || o.strict_w) {
    LevelSpec spec;
    spec.alpha = o.alpha.empty() ? Rational(0) : parse_rational(o.alpha);
    spec.beta_over_pi = o.beta.empty() ? Rational(0) : parse_rational(o.beta);
    spec.strict_r = o.strict_r;
    spec.strict_w = o.strict_w;
    const auto cut = level_cut(f.set, spec);
    if (o.json) {
      ordered_json j;
      j["set"] = o.set;
      j["alpha"] = format_rational(spec.alpha);
      j["beta_over_pi"] = format_rational(spec.beta_over_pi);
      j["strict_r"] = spec.strict_r;
      j["strict_w"] = spec.strict_w;
      j["elements"] = elements_json(cut, C);
      out << j.dump(2) << '\n';
    } else {
      out << "cut(" << o.set << ", alpha=" << format_rational(spec.alpha) << (spec.strict_r ? " strict" : "")
          << ", beta/pi=" << format_rational(spec.beta_over_pi) << (spec.strict_w ? " strict" : "") << ") = "
          << elements_text(cut, C) << '\n';
    }
    return kExitOk;
  }

  std::vector<Membership> image;
  try {
    image = image_values(f.set);
  } catch (const NotHomogeneousError& e) {
    out << o.set << ": " << e.what() << '\n';
    return kExitFail;
  }
  ordered_json levels = ordered_json::array();
  for (const auto& t : image) {
    const auto up = upper_level(f.set, t);
    const auto strong = strong_upper_level(f.set, t);
    if (o.json) {
      ordered_json j;
      j["t"] = to_json(t);
      j["upper"] = elements_json(up, C);
      j["upper_subalgebra"] = is_crisp_subalgebra(L, up).ok();
      j["upper_ideal"] = is_crisp_ideal(L, up).ok();
      j["strong"] = elements_json(strong, C);
      j["strong_subalgebra"] = is_crisp_subalgebra(L, strong).ok();
      j["strong_ideal"] = is_crisp_ideal(L, strong).ok();
      levels.push_back(std::move(j));
    } else {
      auto flags = [&](const CrispSubset& S) {
        return std::string(is_crisp_subalgebra(L, S).ok() ? " subalgebra" : "") +
               (is_crisp_ideal(L, S).ok() ? " ideal" : "");
      };
      out << "t = " << to_string(t) << '\n';
      out << "  U  " << elements_text(up, C) << flags(up) << '\n';
      out << "  U> " << elements_text(strong, C) << flags(strong) << '\n';
    }
  }
  if (o.json) out << ordered_json{{"set", o.set}, {"levels", std::move(levels)}}.dump(2) << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  GenConfig config;
  config.seed = o.seed;
  config.trials = o.trials;
  if (!o.catalog.empty()) {
    config.catalog.clear();
    for (const auto& c : o.catalog) config.catalog.push_back(CatalogEntry::parse(c));
  }
  config.max_p = o.max_p;
  config.max_dim = o.max_dim;
  config.r_max_denominator = o.r_den;
  config.w_max_denominator = o.w_den;
  if (!o.theorem.empty()) config.theorem = o.theorem;
  config.threads = o.threads;
  config.timing = o.timing;
  try {
    validate_config(config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto report = run_suite(config);
  const auto j = report.to_json();
  if (!o.out_file.empty()) {
    std::ofstream f(o.out_file);
    f << j.dump(2) << '\n';
    if (!f) throw UsageError("cannot write '" + o.out_file + "'");
  }
  if (o.json) {
    out << j.dump(2) << '\n';
  } else {
    out << "seed " << config.seed << ", " << config.trials << " trials per theorem\n";
    for (const auto& t : report.theorems) {
      out << t.verdict() << ' ' << t.id << ' ' << t.passes << '/' << t.trials;
      if (t.homs) out << " (" << t.homs << " homs)";
      if (t.exhausted) out << " exhausted " << t.exhausted;
      if (config.timing) out << ' ' << static_cast<long long>(t.wall_ms) << " ms";
      out << '\n';
      for (const auto& fl : t.failures) out << "  trial " << fl.trial << ": " << fl.outcome.dump() << '\n';
    }
    out << "overall " << report.overall << '\n';
  }
  return report.overall == "PASS" || report.overall == "VACUOUS" ? kExitOk : kExitFail;
}

int cmd_probe(const Options& o, std::ostream& out) {
  ProbeRequest req;
  req.theorem = o.theorem;
  req.drop = o.drop;
  req.budget = o.budget;
  req.seed = o.seed;
  if (!o.catalog.empty()) {
    req.catalog.clear();
    for (const auto& c : o.catalog) req.catalog.push_back(CatalogEntry::parse(c));
  }
  ProbeResult res;
  try {
    res = find_hypothesis_counterexample(req);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (res.instance && !o.out_file.empty()) write_scenario(*res.instance, o.out_file);
  if (o.json) {
    out << res.to_json().dump(2) << '\n';
  } else {
    out << res.theorem << " without " << res.drop << ": " << (res.found() ? "FOUND" : "NOT_FOUND") << " after "
        << res.attempts << " instances\n";
    if (res.conclusion) out << "  " << describe(*res.conclusion) << '\n';
    if (res.instance && !o.out_file.empty()) out << "  instance written to " << o.out_file << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complex fuzzy Lie subalgebras and ideals over finite carriers", "cfla"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "machine-readable output");

  auto* validate = app.add_subcommand("validate", "load a scenario and run its checks");
  validate->add_option("--scenario", o.scenario, "scenario file")->required();

  auto* check = app.add_subcommand("check", "evaluate one predicate on a named set");
  check->add_option("--scenario", o.scenario, "scenario file")->required();
  check->add_option("--op", o.op, "predicate")
      ->required()
      ->check(CLI::IsMember({"subalgebra", "ideal", "homogeneous", "levels", "decomposition"}));
  check->add_option("--set", o.set, "fuzzy set name")->required();
  check->add_option("--hom", o.hom, "evaluate on the preimage of the set under this hom");

  auto* sum = app.add_subcommand("sum", "fuzzy sum of two sets");
  sum->add_option("--scenario", o.scenario, "scenario file")->required();
  sum->add_option("--a", o.a, "first set")->required();
  sum->add_option("--b", o.b, "second set")->required();
  sum->add_option("--out", o.out_file, "write the result as a scenario");
  sum->add_option("--name", o.name, "name of the result set");

  auto* inter = app.add_subcommand("intersect", "intersection of one or more sets");
  inter->add_option("--scenario", o.scenario, "scenario file")->required();
  inter->add_option("--sets", o.sets, "set names")->required()->expected(1, -1);
  inter->add_option("--out", o.out_file, "write the result as a scenario");
  inter->add_option("--name", o.name, "name of the result set");

  auto* hom = app.add_subcommand("hom", "image or preimage of a set");
  hom->add_option("direction", o.direction, "image or preimage")->required()->check(CLI::IsMember({"image", "preimage"}));
  hom->add_option("--scenario", o.scenario, "scenario file")->required();
  hom->add_option("--hom", o.hom, "hom name")->required();
  hom->add_option("--set", o.set, "set name")->required();
  hom->add_option("--out", o.out_file, "write the result as a scenario");
  hom->add_option("--name", o.name, "name of the result set");

  auto* levels = app.add_subcommand("levels", "upper levels, or one (alpha, beta) cut");
  levels->add_option("--scenario", o.scenario, "scenario file")->required();
  levels->add_option("--set", o.set, "set name")->required();
  levels->add_option("--alpha", o.alpha, "amplitude threshold");
  levels->add_option("--beta-over-pi", o.beta, "phase threshold over pi");
  levels->add_flag("--strict-r", o.strict_r, "strict amplitude comparison");
  levels->add_flag("--strict-w", o.strict_w, "strict phase comparison");

  auto* verify = app.add_subcommand("verify", "run the seeded theorem suite");
  verify->add_option("--seed", o.seed, "base seed");
  verify->add_option("--trials", o.trials, "trials per theorem (per hom for hom theorems)");
  verify->add_option("--theorem", o.theorem, "theorem id or id prefix");
  verify->add_option("--catalog", o.catalog, "catalog entries such as heisenberg3/3")->delimiter(',');
  verify->add_option("--max-p", o.max_p, "largest allowed prime");
  verify->add_option("--max-dim", o.max_dim, "largest allowed dimension");
  verify->add_option("--r-denominator", o.r_den, "largest amplitude denominator");
  verify->add_option("--w-denominator", o.w_den, "largest phase denominator");
  verify->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  verify->add_flag("--timing", o.timing, "include wall times");
  verify->add_option("--out", o.out_file, "also write the JSON report here");

  auto* probe = app.add_subcommand("probe", "search for a counterexample with one hypothesis dropped");
  probe->add_option("--theorem", o.theorem, "theorem id")->required();
  probe->add_option("--drop", o.drop, "hypothesis to drop")->required();
  probe->add_option("--budget", o.budget, "instances to try");
  probe->add_option("--seed", o.seed, "base seed");
  probe->add_option("--catalog", o.catalog, "catalog entries")->delimiter(',');
  probe->add_option("--out", o.out_file, "write a found instance as a scenario");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (sum->parsed()) return cmd_sum(o, out);
    if (inter->parsed()) return cmd_intersect(o, out);
    if (hom->parsed()) return cmd_hom(o, out);
    if (levels->parsed()) return cmd_levels(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (probe->parsed()) return cmd_probe(o, out);
  } catch (const ScenarioError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cfla::harness

#include "cfla/harness/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "cfla/errors.hpp"
#include "cfla/hom_theorems.hpp"
#include "cfla/predicates.hpp"
#include "cfla/theorems.hpp"

namespace cfla::harness {

namespace {

enum class Arg { set, hom, rational, flag };

struct OpDef {
  std::vector<Arg> fixed;
  bool variadic_sets = false;  // one or more further sets
  std::size_t min_sets = 0;
  std::size_t max_sets = 0;
  std::function<CheckResult(const Scenario&, const std::vector<std::string>&)> eval;
};

const LieAlgebra& algebra_of(const Scenario& s, const std::string& set) {
  return s.algebra(s.fuzzy_set(set).algebra);
}
const ComplexFuzzySet& set_of(const Scenario& s, const std::string& name) { return s.fuzzy_set(name).set; }

std::vector<ComplexFuzzySet> sets_from(const Scenario& s, const std::vector<std::string>& names, std::size_t first) {
  std::vector<ComplexFuzzySet> out;
  for (std::size_t i = first; i < names.size(); ++i) out.push_back(set_of(s, names[i]));
  return out;
}

void require_same_algebra(const Scenario& s, const std::vector<std::string>& names, std::size_t first) {
  for (std::size_t i = first + 1; i < names.size(); ++i) {
    if (s.fuzzy_set(names[i]).algebra != s.fuzzy_set(names[first]).algebra) {
      throw CarrierMismatch("sets '" + names[first] + "' and '" + names[i] + "' live on different algebras");
    }
  }
}

CheckResult levelcut_over(const LieHom& phi, const ComplexFuzzySet& B, const std::vector<LevelSpec>& grid) {
  for (const auto& spec : grid) {
    auto r = check_levelcut_commutation(phi, B, spec);
    if (!r.ok()) {
      if (r.witness) {
        r.witness->detail += " at alpha=" + format_rational(spec.alpha) +
                             ", beta/pi=" + format_rational(spec.beta_over_pi);
      }
      return r;
    }
  }
  return CheckResult::pass();
}

CheckResult hom_op(HomTheorem which, const Scenario& s, const std::vector<std::string>& a) {
  const auto& phi = s.hom(a[0]);
  if (which == HomTheorem::sum_commutation) {
    return check_hom_theorem(which, phi, set_of(s, a[1]), &set_of(s, a[2]));
  }
  return check_hom_theorem(which, phi, set_of(s, a[1]));
}

const std::map<std::string, OpDef>& op_table() {
  static const std::map<std::string, OpDef> table = [] {
    std::map<std::string, OpDef> t;
    const auto one_set = [](auto f) {
      return OpDef{{Arg::set}, false, 0, 0, [f](const Scenario& s, const std::vector<std::string>& a) {
                     return f(algebra_of(s, a[0]), set_of(s, a[0]));
                   }};
    };
    t["subalgebra"] = one_set([](const LieAlgebra& L, const ComplexFuzzySet& A) { return is_complex_fuzzy_subalgebra(L, A); });
    t["ideal"] = one_set([](const LieAlgebra& L, const ComplexFuzzySet& A) { return is_complex_fuzzy_ideal(L, A); });
    t["homogeneous"] = one_set([](const LieAlgebra&, const ComplexFuzzySet& A) { return is_homogeneous(A); });
    t["negation-lemma"] = one_set([](const LieAlgebra& L, const ComplexFuzzySet& A) { return check_negation_lemma(L, A); });
    for (const char* id : {"decomposition", "decomposition/subalgebra", "decomposition/ideal"}) {
      t[id] = one_set([](const LieAlgebra& L, const ComplexFuzzySet& A) { return check_decomposition_theorem(L, A); });
    }
    for (auto mode : {Mode::subalgebra, Mode::ideal}) {
      t["pi-scaling/" + std::string(to_string(mode))] = one_set([mode](const LieAlgebra& L, const ComplexFuzzySet& A) {
        return check_pi_scaling(L, decompose(A).first, mode);
      });
      for (auto strength : {Strength::upper, Strength::strong}) {
        t["level/" + std::string(to_string(mode)) + "/" + std::string(to_string(strength))] =
            one_set([mode, strength](const LieAlgebra& L, const ComplexFuzzySet& A) {
              return check_level_theorem(L, A, mode, strength);
            });
      }
      const auto inter = [mode](const Scenario& s, const std::vector<std::string>& a) {
        require_same_algebra(s, a, 0);
        const auto sets = sets_from(s, a, 0);
        return check_intersection_theorems(algebra_of(s, a[0]), sets, mode);
      };
      const std::string m(to_string(mode));
      t["intersection/" + m] = OpDef{{}, true, 1, 0, inter};
      t["intersection-pair/" + m] = OpDef{{}, true, 2, 2, inter};
      t["intersection-family/" + m] = OpDef{{}, true, 2, 0, inter};
    }
    t["levels"] = one_set([](const LieAlgebra& L, const ComplexFuzzySet& A) {
      for (auto mode : {Mode::subalgebra, Mode::ideal}) {
        for (auto strength : {Strength::upper, Strength::strong}) {
          auto r = check_level_theorem(L, A, mode, strength);
          if (!r.ok()) return r;
        }
      }
      return CheckResult::pass();
    });
    t["mutually-homogeneous"] = OpDef{{Arg::set, Arg::set}, false, 0, 0, [](const Scenario& s, const std::vector<std::string>& a) {
                                        return is_mutually_homogeneous(set_of(s, a[0]), set_of(s, a[1]));
                                      }};
    t["sum-ideal"] = OpDef{{Arg::set, Arg::set}, false, 0, 0, [](const Scenario& s, const std::vector<std::string>& a) {
                             require_same_algebra(s, a, 0);
                             return check_sum_ideal_theorem(algebra_of(s, a[0]), set_of(s, a[0]), set_of(s, a[1]));
                           }};
    t["hom"] = OpDef{{Arg::hom}, false, 0, 0, [](const Scenario& s, const std::vector<std::string>& a) {
                       return validate_hom(s.hom(a[0])).result;
                     }};
    for (auto which : {HomTheorem::preimage_subalgebra, HomTheorem::preimage_ideal, HomTheorem::image_subalgebra,
                       HomTheorem::image_ideal}) {
      t[std::string(to_string(which))] = OpDef{{Arg::hom, Arg::set}, false, 0, 0,
                                               [which](const Scenario& s, const std::vector<std::string>& a) {
                                                 return hom_op(which, s, a);
                                               }};
    }
    t["hom-sum-commutation"] = OpDef{{Arg::hom, Arg::set, Arg::set}, false, 0, 0,
                                     [](const Scenario& s, const std::vector<std::string>& a) {
                                       return hom_op(HomTheorem::sum_commutation, s, a);
                                     }};
    t["sum-ideal-conclusion"] = OpDef{{Arg::set, Arg::set}, false, 0, 0, [](const Scenario& s, const std::vector<std::string>& a) {
                                        require_same_algebra(s, a, 0);
                                        return sum_ideal_conclusion(algebra_of(s, a[0]), set_of(s, a[0]), set_of(s, a[1]));
                                      }};
    for (auto mode : {Mode::subalgebra, Mode::ideal}) {
      t["intersection-conclusion/" + std::string(to_string(mode))] =
          OpDef{{}, true, 1, 0, [mode](const Scenario& s, const std::vector<std::string>& a) {
                  require_same_algebra(s, a, 0);
                  const auto sets = sets_from(s, a, 0);
                  return intersection_conclusion(algebra_of(s, a[0]), sets, mode);
                }};
    }
    for (auto which : {HomTheorem::image_subalgebra, HomTheorem::image_ideal}) {
      t[std::string(to_string(which)) + "-conclusion"] =
          OpDef{{Arg::hom, Arg::set}, false, 0, 0, [which](const Scenario& s, const std::vector<std::string>& a) {
                  return hom_theorem_conclusion(which, s.hom(a[0]), set_of(s, a[1]));
                }};
    }
    t["hom-sum-commutation-conclusion"] =
        OpDef{{Arg::hom, Arg::set, Arg::set}, false, 0, 0, [](const Scenario& s, const std::vector<std::string>& a) {
                return hom_theorem_conclusion(HomTheorem::sum_commutation, s.hom(a[0]), set_of(s, a[1]), &set_of(s, a[2]));
              }};
    t["levelcut"] = OpDef{{Arg::hom, Arg::set, Arg::rational, Arg::rational}, false, 0, 0,
                          [](const Scenario& s, const std::vector<std::string>& a) {
                            LevelSpec spec;
                            spec.alpha = parse_rational(a[2]);
                            spec.beta_over_pi = parse_rational(a[3]);
                            for (std::size_t i = 4; i < a.size(); ++i) {
                              if (a[i] == "strict-r") spec.strict_r = true;
                              if (a[i] == "strict-w") spec.strict_w = true;
                            }
                            return check_levelcut_commutation(s.hom(a[0]), set_of(s, a[1]), spec);
                          }};
    for (bool sr : {false, true}) {
      for (bool sw : {false, true}) {
        const std::string id = std::string("levelcut/") + (sr ? "gt" : "ge") + "-" + (sw ? "gt" : "ge");
        t[id] = OpDef{{Arg::hom, Arg::set}, false, 0, 0, [sr, sw](const Scenario& s, const std::vector<std::string>& a) {
                        const auto& B = set_of(s, a[1]);
                        return levelcut_over(s.hom(a[0]), B, levelcut_grid(B, sr, sw));
                      }};
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

std::vector<std::string> check_ops() {
  std::vector<std::string> out;
  for (const auto& [name, def] : op_table()) out.push_back(name);
  return out;
}

void validate_check(const Scenario& s, const CheckSpec& spec) {
  const auto& table = op_table();
  const auto it = table.find(spec.op);
  if (it == table.end()) throw std::invalid_argument("unknown op '" + spec.op + "'");
  const auto& def = it->second;
  const auto& args = spec.args;
  const bool levelcut_flags = spec.op == "levelcut";
  if (args.size() < def.fixed.size()) {
    throw std::invalid_argument("needs " + std::to_string(def.fixed.size()) + " arguments");
  }
  for (std::size_t i = 0; i < def.fixed.size(); ++i) {
    switch (def.fixed[i]) {
      case Arg::set:
        if (!s.has_fuzzy_set(args[i])) throw std::invalid_argument("unknown fuzzy set '" + args[i] + "'");
        break;
      case Arg::hom:
        if (!s.has_hom(args[i])) throw std::invalid_argument("unknown hom '" + args[i] + "'");
        break;
      case Arg::rational:
        parse_rational(args[i]);
        break;
      case Arg::flag:
        break;
    }
  }
  const auto extra = args.size() - def.fixed.size();
  if (levelcut_flags) {
    for (std::size_t i = def.fixed.size(); i < args.size(); ++i) {
      if (args[i] != "strict-r" && args[i] != "strict-w") throw std::invalid_argument("unknown flag '" + args[i] + "'");
    }
  } else if (def.variadic_sets) {
    if (extra < def.min_sets) throw std::invalid_argument("needs at least " + std::to_string(def.min_sets) + " sets");
    if (def.max_sets != 0 && extra > def.max_sets) {
      throw std::invalid_argument("takes at most " + std::to_string(def.max_sets) + " sets");
    }
    for (std::size_t i = def.fixed.size(); i < args.size(); ++i) {
      if (!s.has_fuzzy_set(args[i])) throw std::invalid_argument("unknown fuzzy set '" + args[i] + "'");
    }
  } else if (extra != 0) {
    throw std::invalid_argument("takes " + std::to_string(def.fixed.size()) + " arguments");
  }
}

CheckResult evaluate_check(const Scenario& s, const CheckSpec& spec) {
  validate_check(s, spec);
  return op_table().at(spec.op).eval(s, spec.args);
}

CheckOutcome run_check(const Scenario& s, const CheckSpec& spec) {
  CheckOutcome out;
  out.spec = spec;
  try {
    out.result = evaluate_check(s, spec);
    out.passed = spec.expect ? out.result.verdict == *spec.expect : out.result.ok();
  } catch (const PreconditionError& e) {
    out.error = std::string("precondition: ") + e.what();
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

std::vector<CheckOutcome> run_checks(const Scenario& s) {
  std::vector<CheckOutcome> out;
  for (const auto& c : s.checks) out.push_back(run_check(s, c));
  return out;
}

ordered_json to_json(const CheckOutcome& o) {
  ordered_json j;
  j["op"] = o.spec.op;
  j["args"] = o.spec.args;
  if (o.spec.expect) j["expect"] = std::string(to_string(*o.spec.expect));
  if (o.error) {
    j["error"] = *o.error;
  } else {
    j["verdict"] = std::string(to_string(o.result.verdict));
    if (o.result.witness) j["witness"] = to_json(*o.result.witness);
  }
  j["passed"] = o.passed;
  return j;
}

std::vector<LevelSpec> levelcut_grid(const ComplexFuzzySet& B, bool strict_r, bool strict_w) {
  std::set<Rational> alphas{Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
  std::set<Rational> betas{Rational(0), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
  for (const auto& v : B.values()) {
    alphas.insert(v.r());
    betas.insert(v.w_over_pi());
  }
  std::vector<LevelSpec> grid;
  for (const auto& a : alphas) {
    for (const auto& b : betas) grid.push_back(LevelSpec{a, b, strict_r, strict_w});
  }
  return grid;
}

}  // namespace cfla::harness

#include "cfla/theorems.hpp"

#include "cfla/crisp.hpp"
#include "cfla/errors.hpp"
#include "cfla/fuzzy_sum.hpp"
#include "cfla/levels.hpp"

namespace cfla {

std::string_view to_string(Strength s) { return s == Strength::upper ? "upper" : "strong"; }

namespace {

Witness mismatch(std::string condition, std::string detail) {
  Witness w;
  w.condition = std::move(condition);
  w.detail = std::move(detail);
  return w;
}

const char* verdict_word(bool ok) { return ok ? "holds" : "fails"; }

}  // namespace

CheckResult check_level_theorem(const LieAlgebra& L, const ComplexFuzzySet& A, Mode mode, Strength strength) {
  if (auto h = is_homogeneous(A); !h.ok()) return CheckResult::not_homogeneous(std::move(*h.witness));
  const bool fuzzy_ok = is_complex_fuzzy(L, A, mode).ok();

  bool levels_ok = true;
  std::optional<Witness> level_witness;
  for (const auto& t : image_values(A)) {
    const auto level = strength == Strength::upper ? upper_level(A, t) : strong_upper_level(A, t);
    auto crisp = mode == Mode::subalgebra ? is_crisp_subalgebra(L, level) : is_crisp_ideal(L, level);
    if (!crisp.ok()) {
      levels_ok = false;
      level_witness = std::move(crisp.witness);
      if (level_witness) level_witness->values.insert(level_witness->values.begin(), t);
      break;
    }
  }
  if (fuzzy_ok == levels_ok) return CheckResult::pass();

  Witness w = level_witness.value_or(Witness{});
  w.condition = "level-theorem/" + std::string(to_string(mode)) + "/" + std::string(to_string(strength));
  w.detail = std::string("fuzzy predicate ") + verdict_word(fuzzy_ok) + " but the level-set condition " +
             verdict_word(levels_ok);
  return CheckResult::failure(std::move(w));
}

CheckResult check_decomposition_theorem(const LieAlgebra& L, const ComplexFuzzySet& A) {
  if (auto h = is_homogeneous(A); !h.ok()) return CheckResult::not_homogeneous(std::move(*h.witness));
  const auto [r_part, w_part] = decompose(A);
  for (auto mode : {Mode::subalgebra, Mode::ideal}) {
    const bool complex_ok = is_complex_fuzzy(L, A, mode).ok();
    const bool r_ok = is_real_fuzzy(L, r_part, mode).ok();
    const bool w_ok = is_pi_fuzzy(L, w_part, mode).ok();
    if (complex_ok != (r_ok && w_ok)) {
      return CheckResult::failure(mismatch(
          "decomposition/" + std::string(to_string(mode)),
          std::string("complex predicate ") + verdict_word(complex_ok) + ", amplitude part " + verdict_word(r_ok) +
              ", phase part " + verdict_word(w_ok)));
    }
  }
  return CheckResult::pass();
}

CheckResult check_pi_scaling(const LieAlgebra& L, const RealFuzzySet& F, Mode mode) {
  const bool real_ok = is_real_fuzzy(L, F, mode).ok();
  const bool pi_ok = is_pi_fuzzy(L, to_pi_fuzzy(F), mode).ok();
  if (real_ok == pi_ok) return CheckResult::pass();
  return CheckResult::failure(mismatch("pi-scaling/" + std::string(to_string(mode)),
                                       std::string("fuzzy set ") + verdict_word(real_ok) + ", pi-fuzzy set " +
                                           verdict_word(pi_ok)));
}

std::optional<std::string> sum_ideal_hypothesis_gap(const LieAlgebra& L, const ComplexFuzzySet& A,
                                                    const ComplexFuzzySet& B) {
  if (!is_complex_fuzzy_ideal(L, A).ok()) return "A is not a complex fuzzy ideal";
  if (!is_complex_fuzzy_ideal(L, B).ok()) return "B is not a complex fuzzy ideal";
  if (!is_mutually_homogeneous(A, B).ok()) return "A is not homogeneous with B";
  return std::nullopt;
}

CheckResult sum_ideal_conclusion(const LieAlgebra& L, const ComplexFuzzySet& A, const ComplexFuzzySet& B) {
  const auto sum = fuzzy_sum(L, A, B);
  auto verdict = is_complex_fuzzy_ideal(L, sum);
  if (verdict.witness) verdict.witness->detail = "A+B: " + verdict.witness->detail;
  return verdict;
}

CheckResult check_sum_ideal_theorem(const LieAlgebra& L, const ComplexFuzzySet& A, const ComplexFuzzySet& B) {
  if (auto gap = sum_ideal_hypothesis_gap(L, A, B)) throw PreconditionError(*gap);
  return sum_ideal_conclusion(L, A, B);
}

std::optional<std::string> intersection_hypothesis_gap(const LieAlgebra& L, std::span<const ComplexFuzzySet> sets,
                                                       Mode mode) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!is_complex_fuzzy(L, sets[i], mode).ok()) {
      return "set " + std::to_string(i) + " is not a complex fuzzy " + std::string(to_string(mode));
    }
  }
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (i != j && !is_mutually_homogeneous(sets[i], sets[j]).ok()) {
        return "set " + std::to_string(i) + " is not homogeneous with set " + std::to_string(j);
      }
  return std::nullopt;
}

CheckResult intersection_conclusion(const LieAlgebra& L, std::span<const ComplexFuzzySet> sets, Mode mode) {
  return is_complex_fuzzy(L, intersect_family(sets), mode);
}

CheckResult check_intersection_theorems(const LieAlgebra& L, std::span<const ComplexFuzzySet> sets, Mode mode) {
  if (sets.empty()) throw std::invalid_argument("intersection of an empty family");
  if (auto gap = intersection_hypothesis_gap(L, sets, mode)) throw PreconditionError(*gap);
  return intersection_conclusion(L, sets, mode);
}

}  // namespace cfla

#include "cfla/hom_theorems.hpp"

#include <array>
#include <utility>

#include "cfla/errors.hpp"
#include "cfla/fuzzy_sum.hpp"
#include "cfla/predicates.hpp"

namespace cfla {

namespace {

constexpr std::array<std::pair<HomTheorem, std::string_view>, 5> kNames{{
    {HomTheorem::preimage_subalgebra, "preimage-subalgebra"},
    {HomTheorem::preimage_ideal, "preimage-ideal"},
    {HomTheorem::image_subalgebra, "image-subalgebra"},
    {HomTheorem::image_ideal, "image-ideal"},
    {HomTheorem::sum_commutation, "sum-commutation"},
}};

Mode mode_of(HomTheorem t) {
  return t == HomTheorem::preimage_subalgebra || t == HomTheorem::image_subalgebra ? Mode::subalgebra : Mode::ideal;
}

}  // namespace

std::string_view to_string(HomTheorem t) {
  for (const auto& [id, name] : kNames)
    if (id == t) return name;
  return "?";
}

std::optional<HomTheorem> parse_hom_theorem(std::string_view text) {
  for (const auto& [id, name] : kNames)
    if (name == text) return id;
  return std::nullopt;
}

std::optional<std::string> hom_hypothesis_gap(HomTheorem which, const LieHom& phi, const ComplexFuzzySet& a,
                                              const ComplexFuzzySet* b) {
  if (!validate_hom(phi).result.ok()) return "'" + phi.name() + "' is not a Lie algebra homomorphism";
  switch (which) {
    case HomTheorem::preimage_subalgebra:
    case HomTheorem::preimage_ideal: {
      const auto mode = mode_of(which);
      if (!is_complex_fuzzy(phi.target(), a, mode).ok()) {
        return "B is not a complex fuzzy " + std::string(to_string(mode)) + " of the target";
      }
      return std::nullopt;
    }
    case HomTheorem::image_subalgebra:
    case HomTheorem::image_ideal: {
      if (!phi.surjective()) return "'" + phi.name() + "' is not surjective";
      const auto mode = mode_of(which);
      if (!is_complex_fuzzy(phi.source(), a, mode).ok()) {
        return "A is not a complex fuzzy " + std::string(to_string(mode)) + " of the source";
      }
      return std::nullopt;
    }
    case HomTheorem::sum_commutation:
      if (b == nullptr) throw std::invalid_argument("sum commutation needs two sets");
      if (!phi.surjective()) return "'" + phi.name() + "' is not surjective";
      if (!is_complex_fuzzy_ideal(phi.source(), a).ok()) return "A is not a complex fuzzy ideal of the source";
      if (!is_complex_fuzzy_ideal(phi.source(), *b).ok()) return "B is not a complex fuzzy ideal of the source";
      if (!is_mutually_homogeneous(a, *b).ok()) return "A is not homogeneous with B";
      return std::nullopt;
  }
  return std::nullopt;
}

CheckResult hom_theorem_conclusion(HomTheorem which, const LieHom& phi, const ComplexFuzzySet& a,
                                   const ComplexFuzzySet* b) {
  switch (which) {
    case HomTheorem::preimage_subalgebra:
    case HomTheorem::preimage_ideal:
      return is_complex_fuzzy(phi.source(), preimage_cfs(phi, a), mode_of(which));
    case HomTheorem::image_subalgebra:
    case HomTheorem::image_ideal:
      return is_complex_fuzzy(phi.target(), image_cfs(phi, a), mode_of(which));
    case HomTheorem::sum_commutation: {
      if (b == nullptr) throw std::invalid_argument("sum commutation needs two sets");
      const auto lhs = image_cfs(phi, fuzzy_sum(phi.source(), a, *b));
      const auto rhs = fuzzy_sum(phi.target(), image_cfs(phi, a), image_cfs(phi, *b));
      const Carrier dst(phi.target());
      for (auto y : dst.scan_order()) {
        if (!(lhs[y] == rhs[y])) {
          Witness w;
          w.condition = "sum-commutation";
          w.elements = {dst.element(y)};
          w.values = {lhs[y], rhs[y]};
          w.detail = "phi(A+B)(y) != (phi(A)+phi(B))(y)";
          return CheckResult::failure(std::move(w));
        }
      }
      return CheckResult::pass();
    }
  }
  return CheckResult::pass();
}

CheckResult check_hom_theorem(HomTheorem which, const LieHom& phi, const ComplexFuzzySet& a, const ComplexFuzzySet* b) {
  if (auto gap = hom_hypothesis_gap(which, phi, a, b)) throw PreconditionError(*gap);
  return hom_theorem_conclusion(which, phi, a, b);
}

CheckResult check_levelcut_commutation(const LieHom& phi, const ComplexFuzzySet& B, const LevelSpec& spec) {
  const auto pulled = preimage_cfs(phi, B);
  const Carrier src(phi.source());
  const Carrier dst(phi.target());
  const auto target_cut = level_cut(B, spec).mask(dst);
  const auto map = phi.index_map(src, dst);
  std::vector<std::uint32_t> crisp_preimage;
  for (std::size_t x = 0; x < src.size(); ++x)
    if (target_cut[map[x]]) crisp_preimage.push_back(static_cast<std::uint32_t>(x));
  const CrispSubset lhs(src, std::move(crisp_preimage));
  const auto rhs = level_cut(pulled, spec);
  if (lhs == rhs) return CheckResult::pass();

  Witness w;
  w.condition = "levelcut-commutation";
  for (auto x : src.scan_order()) {
    if (lhs.contains(x) != rhs.contains(x)) {
      w.elements = {src.element(x)};
      w.values = {pulled[x]};
      break;
    }
  }
  w.detail = "phi^{-1}(B cut) and (phi^{-1} B) cut differ";
  return CheckResult::failure(std::move(w));
}

}  // namespace cfla

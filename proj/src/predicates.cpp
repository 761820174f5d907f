#include "cfla/predicates.hpp"

#include <vector>

#include "cfla/errors.hpp"
#include "cfla/kernels.hpp"

namespace cfla {

std::string_view to_string(Mode m) { return m == Mode::subalgebra ? "subalgebra" : "ideal"; }

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::scalar: return "scalar";
    case Condition::sum: return "sum";
    case Condition::bracket: return "bracket";
    case Condition::bracket_ideal: return "bracket-ideal";
  }
  return "?";
}

std::optional<ClosureViolation> find_closure_violation(const LieAlgebra& L, const Carrier& C,
                                                       std::span<const Code> codes, Mode mode) {
  const auto scan = C.scan_order();
  const auto scalars = C.scalar_scan_order();

  std::vector<std::int32_t> target(scalars.size());
  for (auto x : scan) {
    for (std::size_t k = 0; k < scalars.size(); ++k) target[k] = static_cast<std::int32_t>(C.scale(scalars[k], x));
    const auto i = kernels::first_below(codes, target, codes[x]);
    if (i < target.size()) {
      return ClosureViolation{Condition::scalar, x, x, scalars[i], static_cast<std::size_t>(target[i])};
    }
  }

  std::vector<Code> partner(scan.size());
  for (std::size_t i = 0; i < scan.size(); ++i) partner[i] = codes[scan[i]];
  target.assign(scan.size(), 0);

  for (auto x : scan) {
    for (std::size_t i = 0; i < scan.size(); ++i) target[i] = static_cast<std::int32_t>(C.add(x, scan[i]));
    const auto i = kernels::first_below_meet(codes, target, codes[x], partner);
    if (i < target.size()) return ClosureViolation{Condition::sum, x, scan[i], 0, static_cast<std::size_t>(target[i])};
  }

  // Once the scalar condition holds, mu(-z) = mu(z), so mu([x,y]) >= mu(y) is the
  // (y, x) instance of mu([y,x]) >= mu(y); the join form reduces to the x-side scan.
  for (auto x : scan) {
    bracket_row(L, C, x, scan, target);
    const auto i = mode == Mode::subalgebra ? kernels::first_below_meet(codes, target, codes[x], partner)
                                            : kernels::first_below(codes, target, codes[x]);
    if (i < target.size()) {
      return ClosureViolation{mode == Mode::subalgebra ? Condition::bracket : Condition::bracket_ideal, x, scan[i], 0,
                              static_cast<std::size_t>(target[i])};
    }
  }
  return std::nullopt;
}

namespace {

void require_on(const LieAlgebra& L, int p, int dim) {
  if (L.p() != p || L.dim() != dim) throw CarrierMismatch("fuzzy set does not live on the carrier of '" + L.name() + "'");
}

template <class ValueAt>
Witness violation_witness(const Carrier& C, const ClosureViolation& v, ValueAt value_at) {
  Witness w;
  w.condition = std::string(to_string(v.condition));
  if (v.condition == Condition::scalar) {
    w.elements = {C.element(v.x), C.element(v.result)};
    w.scalar = v.scalar;
    w.values = {value_at(v.result), value_at(v.x)};
    w.detail = "mu(alpha x) is not >= mu(x)";
    return w;
  }
  w.elements = {C.element(v.x), C.element(v.y), C.element(v.result)};
  w.values = {value_at(v.result), value_at(v.x), value_at(v.y)};
  switch (v.condition) {
    case Condition::sum: w.detail = "mu(x+y) is not >= mu(x) ∧ mu(y)"; break;
    case Condition::bracket: w.detail = "mu([x,y]) is not >= mu(x) ∧ mu(y)"; break;
    default: w.detail = "mu([x,y]) is not >= mu(x) ∨ mu(y)"; break;
  }
  return w;
}

template <int Upper>
CheckResult scalar_predicate(const LieAlgebra& L, const ScalarFuzzySet<Upper>& F, Mode mode) {
  require_on(L, F.p(), F.dim());
  const Carrier C(L);
  const auto book = Codebook::scalar(F.values());
  const auto codes = book.encode_all_scalar(F.values());
  const auto v = find_closure_violation(L, C, codes, mode);
  if (!v) return CheckResult::pass();
  // Scalar values are reported as memberships with zero phase (or as phase only).
  auto value_at = [&](std::size_t idx) {
    return Upper == 1 ? Membership(F[idx], 0) : Membership(0, F[idx]);
  };
  return CheckResult::failure(violation_witness(C, *v, value_at));
}

}  // namespace

CheckResult is_complex_fuzzy(const LieAlgebra& L, const ComplexFuzzySet& A, Mode mode) {
  require_on(L, A.p(), A.dim());
  if (auto h = is_homogeneous(A); !h.ok()) return CheckResult::not_homogeneous(std::move(*h.witness));
  const Carrier C(L);
  const Codebook book{A.values()};
  const auto codes = book.encode_all(A.values());
  const auto v = find_closure_violation(L, C, codes, mode);
  if (!v) return CheckResult::pass();
  return CheckResult::failure(violation_witness(C, *v, [&](std::size_t idx) { return A[idx]; }));
}

CheckResult is_complex_fuzzy_subalgebra(const LieAlgebra& L, const ComplexFuzzySet& A) {
  return is_complex_fuzzy(L, A, Mode::subalgebra);
}
CheckResult is_complex_fuzzy_ideal(const LieAlgebra& L, const ComplexFuzzySet& A) {
  return is_complex_fuzzy(L, A, Mode::ideal);
}

CheckResult is_real_fuzzy(const LieAlgebra& L, const RealFuzzySet& F, Mode mode) { return scalar_predicate(L, F, mode); }
CheckResult is_pi_fuzzy(const LieAlgebra& L, const PiFuzzySet& G, Mode mode) { return scalar_predicate(L, G, mode); }
CheckResult is_real_fuzzy_subalgebra(const LieAlgebra& L, const RealFuzzySet& F) {
  return is_real_fuzzy(L, F, Mode::subalgebra);
}
CheckResult is_real_fuzzy_ideal(const LieAlgebra& L, const RealFuzzySet& F) { return is_real_fuzzy(L, F, Mode::ideal); }
CheckResult is_pi_fuzzy_subalgebra(const LieAlgebra& L, const PiFuzzySet& G) {
  return is_pi_fuzzy(L, G, Mode::subalgebra);
}
CheckResult is_pi_fuzzy_ideal(const LieAlgebra& L, const PiFuzzySet& G) { return is_pi_fuzzy(L, G, Mode::ideal); }

CheckResult check_negation_lemma(const LieAlgebra& L, const ComplexFuzzySet& A) {
  if (!is_complex_fuzzy_subalgebra(L, A).ok()) {
    throw PreconditionError("negation lemma needs a complex fuzzy subalgebra");
  }
  const Carrier C(L);
  auto fail = [&](const char* clause, std::vector<std::size_t> elems, std::string detail) {
    Witness w;
    w.condition = clause;
    for (auto e : elems) {
      w.elements.push_back(C.element(e));
      w.values.push_back(A[e]);
    }
    w.detail = std::move(detail);
    return CheckResult::failure(std::move(w));
  };
  const auto scan = C.scan_order();
  for (auto x : scan) {
    const auto nx = C.negate(x);
    if (!(A[nx] == A[x])) return fail("lemma-i", {x, nx}, "mu(-x) != mu(x)");
  }
  const auto& top = A[0];
  for (auto x : scan)
    for (auto y : scan) {
      const auto d = C.sub(x, y);
      if (A[d] == top && !(A[x] == A[y])) return fail("lemma-ii", {x, y, d}, "mu(x-y) = mu(0) but mu(x) != mu(y)");
    }
  for (auto x : scan)
    for (auto y : scan) {
      if (!gt(A[y], A[x])) continue;
      const auto xy = C.sub(x, y);
      const auto yx = C.sub(y, x);
      if (!(A[xy] == A[x]) || !(A[yx] == A[x])) {
        return fail("lemma-iii", {x, y, xy, yx}, "mu(x) < mu(y) but mu(x-y) = mu(x) = mu(y-x) fails");
      }
    }
  return CheckResult::pass();
}

}  // namespace cfla

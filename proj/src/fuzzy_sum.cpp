#include "cfla/fuzzy_sum.hpp"

#include <vector>

#include "cfla/codebook.hpp"
#include "cfla/errors.hpp"
#include "cfla/kernels.hpp"

namespace cfla {

ComplexFuzzySet fuzzy_sum(const ComplexFuzzySet& A, const ComplexFuzzySet& B) {
  if (!A.same_carrier(B)) throw CarrierMismatch("fuzzy sum needs sets on one carrier");
  const Carrier C(A.p(), A.dim(), A.size());
  const Codebook book{A.values(), B.values()};
  const auto ca = book.encode_all(A.values());
  const auto cb = book.encode_all(B.values());

  // Rank 0 in both halves is below every candidate, and every x has at least one decomposition.
  std::vector<Code> out(C.size(), 0);
  std::vector<std::int32_t> shifted(C.size());
  for (std::size_t a = 0; a < C.size(); ++a) {
    for (std::size_t x = 0; x < C.size(); ++x) shifted[x] = static_cast<std::int32_t>(C.sub(x, a));
    kernels::maxmin_accumulate(out, cb, shifted, ca[a]);
  }
  std::vector<Membership> values;
  values.reserve(out.size());
  for (auto c : out) values.push_back(book.decode(c));
  return {C, std::move(values)};
}

ComplexFuzzySet fuzzy_sum(const LieAlgebra& L, const ComplexFuzzySet& A, const ComplexFuzzySet& B) {
  if (L.p() != A.p() || L.dim() != A.dim()) throw CarrierMismatch("fuzzy sum: set is not on the carrier of '" + L.name() + "'");
  return fuzzy_sum(A, B);
}

bool sum_attains_supremum(const ComplexFuzzySet& A, const ComplexFuzzySet& B, const ComplexFuzzySet& sum) {
  const Carrier C(A.p(), A.dim(), A.size());
  for (std::size_t x = 0; x < C.size(); ++x) {
    bool attained = false;
    for (std::size_t a = 0; a < C.size() && !attained; ++a) attained = meet(A[a], B[C.sub(x, a)]) == sum[x];
    if (!attained) return false;
  }
  return true;
}

}  // namespace cfla

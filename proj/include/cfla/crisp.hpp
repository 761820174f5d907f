#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cfla/carrier.hpp"
#include "cfla/check_result.hpp"
#include "cfla/lie_algebra.hpp"

namespace cfla {

/// An explicit finite set of carrier elements, kept as sorted unique indices.
/// No subspace structure is assumed.
class CrispSubset {
 public:
  CrispSubset() = default;
  /// Throws std::invalid_argument when an index is outside the carrier.
  CrispSubset(const Carrier& carrier, std::vector<std::uint32_t> indices);
  static CrispSubset from_elements(const Carrier& carrier, const std::vector<Element>& elements);
  static CrispSubset whole(const Carrier& carrier);

  int p() const { return p_; }
  int dim() const { return dim_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(std::size_t idx) const;
  const std::vector<std::uint32_t>& indices() const { return members_; }
  std::vector<Element> elements(const Carrier& carrier) const;
  std::vector<bool> mask(const Carrier& carrier) const;

  bool subset_of(const CrispSubset& other) const;

  friend bool operator==(const CrispSubset&, const CrispSubset&) = default;

 private:
  int p_ = 0;
  int dim_ = 0;
  std::vector<std::uint32_t> members_;
};

/// OK iff S is closed under scalar multiples, sums and brackets (the empty set passes vacuously).
/// Witness conditions: "scalar", "sum", "bracket".
CheckResult is_crisp_subalgebra(const LieAlgebra& L, const CrispSubset& S);
/// OK iff S is closed under scalar multiples and sums, and [x, y] is in S for x in S and any y in L.
CheckResult is_crisp_ideal(const LieAlgebra& L, const CrispSubset& S);

/// Linear span of the given elements.
CrispSubset span_of(const Carrier& carrier, const std::vector<std::uint32_t>& generators);
/// Every subspace of F_p^n, ordered by size then by members.
std::vector<CrispSubset> all_subspaces(const Carrier& carrier);
std::vector<CrispSubset> crisp_subalgebras(const LieAlgebra& L);
std::vector<CrispSubset> crisp_ideals(const LieAlgebra& L);

}  // namespace cfla

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cfla/check_result.hpp"
#include "cfla/element.hpp"
#include "cfla/field.hpp"

namespace cfla {

inline constexpr int kMinDim = 1;
inline constexpr int kMaxDim = 4;

/// c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k, stored flat.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim * dim * dim), 0) {}
  /// Throws std::invalid_argument unless the nesting is dim x dim x dim.
  static StructureConstants from_nested(const std::vector<std::vector<std::vector<int>>>& c);

  int dim() const { return dim_; }
  int at(int i, int j, int k) const { return data_[index(i, j, k)]; }
  void set(int i, int j, int k, int v) { data_[index(i, j, k)] = v; }
  std::vector<std::vector<std::vector<int>>> nested() const;

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  std::size_t index(int i, int j, int k) const {
    return static_cast<std::size_t>((i * dim_ + j) * dim_ + k);
  }
  int dim_ = 0;
  std::vector<int> data_;
};

/// Checks the Lie axioms on a raw table: entries in range, alternating
/// (c[i][i][k] = 0), antisymmetric, and Jacobi on every basis triple.
/// A failure names the axiom in `condition` and the basis indices (0-based).
/// Throws std::invalid_argument for a non-prime p or a dimension outside [1, 4].
CheckResult validate_algebra(const StructureConstants& c, int p, int dim);

/// A Lie algebra over F_p given by structure constants. Immutable; the
/// constructor rejects tables that fail validate_algebra.
class LieAlgebra {
 public:
  LieAlgebra(std::string name, FieldPrime field, StructureConstants constants);

  const std::string& name() const { return name_; }
  const FieldPrime& field() const { return field_; }
  int p() const { return field_.p(); }
  int dim() const { return constants_.dim(); }
  const StructureConstants& constants() const { return constants_; }
  int constant(int i, int j, int k) const { return constants_.at(i, j, k); }

  /// p^dim, saturating well above any enumeration budget.
  std::size_t carrier_size() const;
  bool is_abelian() const;

  /// True when both algebras have the same field and dimension (same element set).
  bool same_carrier(const LieAlgebra& other) const {
    return p() == other.p() && dim() == other.dim();
  }

 private:
  std::string name_;
  FieldPrime field_;
  StructureConstants constants_;
};

/// Throws std::invalid_argument when e is not a valid element of L.
void require_element(const LieAlgebra& L, const Element& e);

Element bracket(const LieAlgebra& L, const Element& x, const Element& y);
Element add(const LieAlgebra& L, const Element& x, const Element& y);
Element scale(const LieAlgebra& L, int alpha, const Element& x);
Element zero_element(const LieAlgebra& L);
Element basis_element(const LieAlgebra& L, int i);

}  // namespace cfla

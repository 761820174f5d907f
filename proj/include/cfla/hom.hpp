#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cfla/carrier.hpp"
#include "cfla/check_result.hpp"
#include "cfla/fuzzy_set.hpp"
#include "cfla/lie_algebra.hpp"

namespace cfla {

/// A linear map between two algebras over the same field, given by an m x n
/// matrix (m = target dim, n = source dim): phi(x)_i = sum_j M[i][j] x_j.
/// Construction checks only shape and field; bracket preservation is what
/// validate_hom decides.
class LieHom {
 public:
  /// Entries are reduced mod p. Throws std::invalid_argument on a field
  /// mismatch or a matrix of the wrong shape.
  LieHom(std::string name, LieAlgebra source, LieAlgebra target, std::vector<std::vector<int>> matrix);

  const std::string& name() const { return name_; }
  const LieAlgebra& source() const { return source_; }
  const LieAlgebra& target() const { return target_; }
  const std::vector<std::vector<int>>& matrix() const { return matrix_; }
  int entry(int i, int j) const { return matrix_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  /// Rank over F_p, computed once at construction.
  int rank() const { return rank_; }
  bool surjective() const { return rank_ == target_.dim(); }

  Element apply(const Element& x) const;
  /// Images of every source index, as target indices.
  std::vector<std::size_t> index_map(const Carrier& source, const Carrier& target) const;

 private:
  std::string name_;
  LieAlgebra source_;
  LieAlgebra target_;
  std::vector<std::vector<int>> matrix_;
  int rank_ = 0;
};

struct HomValidation {
  CheckResult result;
  bool surjective = false;
  int rank = 0;
};

/// OK iff phi([e_i, e_j]) = [phi(e_i), phi(e_j)] for every basis pair; also reports surjectivity.
HomValidation validate_hom(const LieHom& phi);

/// mu(x) = mu_B(phi(x)). Throws PreconditionError for an invalid hom, CarrierMismatch if B is not on the target.
ComplexFuzzySet preimage_cfs(const LieHom& phi, const ComplexFuzzySet& B);
/// mu(y) = componentwise sup of mu_A over the fiber of y; (0, 0) for y outside phi(L).
ComplexFuzzySet image_cfs(const LieHom& phi, const ComplexFuzzySet& A);

LieHom identity_hom(const LieAlgebra& L);
/// Identities, projections, embeddings and automorphisms between catalog algebras over F_p.
std::vector<LieHom> catalog_homs(int p);

/// Rank of an integer matrix over F_p.
int rank_mod_p(std::vector<std::vector<int>> rows, const FieldPrime& field);

}  // namespace cfla

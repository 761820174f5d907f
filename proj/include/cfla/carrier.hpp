#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cfla/element.hpp"
#include "cfla/lie_algebra.hpp"

namespace cfla {

inline constexpr std::size_t kDefaultBudget = 2048;

/// The full element set F_p^n with index arithmetic.
///
/// Index order is lexicographic in the coordinates (first coordinate most
/// significant), so index 0 is the zero vector. Separately, `scan_order()`
/// gives the order in which checks look for witnesses: lexicographic with the
/// residues ranked 1 < 2 < ... < p-1 < 0.
class Carrier {
 public:
  /// Throws BudgetExceeded when p^dim > budget.
  Carrier(int p, int dim, std::size_t budget = kDefaultBudget);
  explicit Carrier(const LieAlgebra& L, std::size_t budget = kDefaultBudget)
      : Carrier(L.p(), L.dim(), budget) {}

  int p() const { return p_; }
  int dim() const { return dim_; }
  std::size_t size() const { return size_; }

  std::span<const std::uint8_t> digits(std::size_t idx) const {
    return {digits_.data() + idx * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
  }
  Element element(std::size_t idx) const;
  /// Throws std::invalid_argument for a wrong length or out-of-range coordinate.
  std::size_t index_of(const Element& e) const;
  std::size_t index_of_digits(std::span<const int> coords) const;

  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t sub(std::size_t a, std::size_t b) const;
  std::size_t scale(int alpha, std::size_t a) const;
  std::size_t negate(std::size_t a) const { return scale(p_ - 1, a); }

  /// Element indices in witness-scan order.
  std::span<const std::uint32_t> scan_order() const { return scan_; }
  /// Field scalars in witness-scan order: 1, 2, ..., p-1, 0.
  std::vector<int> scalar_scan_order() const;

  friend bool operator==(const Carrier& a, const Carrier& b) { return a.p_ == b.p_ && a.dim_ == b.dim_; }

 private:
  int p_;
  int dim_;
  std::size_t size_;
  std::vector<std::uint8_t> digits_;
  std::vector<std::size_t> place_;
  std::vector<std::uint32_t> scan_;
};

/// All p^n elements of L in lexicographic order. Throws BudgetExceeded past `budget`.
std::vector<Element> enumerate_carrier(const LieAlgebra& L, std::size_t budget = kDefaultBudget);

/// out[i] = index of [x, ys[i]].
void bracket_row(const LieAlgebra& L, const Carrier& C, std::size_t x, std::span<const std::uint32_t> ys,
                 std::span<std::int32_t> out);
std::size_t bracket_index(const LieAlgebra& L, const Carrier& C, std::size_t x, std::size_t y);

}  // namespace cfla

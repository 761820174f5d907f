#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cfla/carrier.hpp"
#include "cfla/check_result.hpp"
#include "cfla/errors.hpp"
#include "cfla/membership.hpp"

namespace cfla {

/// A complex fuzzy set: one Membership per carrier element, indexed like Carrier.
class ComplexFuzzySet {
 public:
  ComplexFuzzySet() = default;
  /// Throws std::invalid_argument unless values.size() == carrier.size().
  ComplexFuzzySet(const Carrier& carrier, std::vector<Membership> values);

  static ComplexFuzzySet constant(const Carrier& carrier, const Membership& m) {
    return {carrier, std::vector<Membership>(carrier.size(), m)};
  }
  static ComplexFuzzySet from_function(const Carrier& carrier, const std::function<Membership(const Element&)>& f);

  int p() const { return p_; }
  int dim() const { return dim_; }
  std::size_t size() const { return values_.size(); }
  const Membership& at(std::size_t idx) const { return values_.at(idx); }
  const Membership& operator[](std::size_t idx) const { return values_[idx]; }
  std::span<const Membership> values() const { return values_; }

  bool same_carrier(const ComplexFuzzySet& o) const { return p_ == o.p_ && dim_ == o.dim_; }
  bool lives_on(const Carrier& c) const { return p_ == c.p() && dim_ == c.dim(); }

  friend bool operator==(const ComplexFuzzySet&, const ComplexFuzzySet&) = default;

 private:
  int p_ = 0;
  int dim_ = 0;
  std::vector<Membership> values_;
};

/// A fuzzy set with exact rational values in [0, Upper]. Upper = 1 is an
/// ordinary fuzzy set; Upper = 2 is a pi-fuzzy set stored as multiples of pi.
template <int Upper>
class ScalarFuzzySet {
 public:
  ScalarFuzzySet() = default;
  ScalarFuzzySet(const Carrier& carrier, std::vector<Rational> values)
      : p_(carrier.p()), dim_(carrier.dim()), values_(std::move(values)) {
    if (values_.size() != carrier.size()) throw std::invalid_argument("fuzzy set is not total on the carrier");
    for (const auto& v : values_) {
      if (v < 0 || v > Upper) throw std::out_of_range("fuzzy value " + format_rational(v) + " out of range");
    }
  }

  int p() const { return p_; }
  int dim() const { return dim_; }
  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t idx) const { return values_[idx]; }
  std::span<const Rational> values() const { return values_; }
  bool lives_on(const Carrier& c) const { return p_ == c.p() && dim_ == c.dim(); }

  friend bool operator==(const ScalarFuzzySet&, const ScalarFuzzySet&) = default;

 private:
  int p_ = 0;
  int dim_ = 0;
  std::vector<Rational> values_;
};

using RealFuzzySet = ScalarFuzzySet<1>;
/// Values are gamma / pi, in [0, 2].
using PiFuzzySet = ScalarFuzzySet<2>;

/// OK iff r(x) <= r(y) <=> w(x) <= w(y) for every pair; the witness is the first violating pair in scan order.
CheckResult is_homogeneous(const ComplexFuzzySet& A);
/// OK iff r_A(x) <= r_B(y) <=> w_A(x) <= w_B(y) for every x, y. Throws CarrierMismatch.
CheckResult is_mutually_homogeneous(const ComplexFuzzySet& A, const ComplexFuzzySet& B);

std::pair<RealFuzzySet, PiFuzzySet> decompose(const ComplexFuzzySet& A);
ComplexFuzzySet recompose(const RealFuzzySet& r, const PiFuzzySet& w);
/// gamma = 2 pi mu, i.e. w_over_pi = 2 mu.
PiFuzzySet to_pi_fuzzy(const RealFuzzySet& F);

/// Pointwise componentwise meet. Throws CarrierMismatch.
ComplexFuzzySet intersect(const ComplexFuzzySet& A, const ComplexFuzzySet& B);
/// Throws std::invalid_argument for an empty family.
ComplexFuzzySet intersect_family(std::span<const ComplexFuzzySet> family);

}  // namespace cfla

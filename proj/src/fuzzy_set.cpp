#include "cfla/fuzzy_set.hpp"

#include <string>

#include "cfla/codebook.hpp"

namespace cfla {

ComplexFuzzySet::ComplexFuzzySet(const Carrier& carrier, std::vector<Membership> values)
    : p_(carrier.p()), dim_(carrier.dim()), values_(std::move(values)) {
  if (values_.size() != carrier.size()) {
    throw std::invalid_argument("complex fuzzy set has " + std::to_string(values_.size()) + " values for a carrier of " +
                                std::to_string(carrier.size()));
  }
}

ComplexFuzzySet ComplexFuzzySet::from_function(const Carrier& carrier,
                                               const std::function<Membership(const Element&)>& f) {
  std::vector<Membership> values;
  values.reserve(carrier.size());
  for (std::size_t i = 0; i < carrier.size(); ++i) values.push_back(f(carrier.element(i)));
  return {carrier, std::move(values)};
}

namespace {

Carrier carrier_of(const ComplexFuzzySet& A) { return Carrier(A.p(), A.dim(), A.size()); }

// First (x, y) in scan order with (ra[x] <= rb[y]) != (wa[x] <= wb[y]).
CheckResult pairwise_homogeneity(const ComplexFuzzySet& A, const ComplexFuzzySet& B, const char* condition) {
  const Carrier C = carrier_of(A);
  const Codebook book{A.values(), B.values()};
  const auto ca = book.encode_all(A.values());
  const auto cb = book.encode_all(B.values());
  const auto scan = C.scan_order();
  for (auto x : scan) {
    const auto rx = r_rank(ca[x]);
    const auto wx = w_rank(ca[x]);
    for (auto y : scan) {
      if ((rx <= r_rank(cb[y])) != (wx <= w_rank(cb[y]))) {
        Witness w;
        w.condition = condition;
        w.elements = {C.element(x), C.element(y)};
        w.values = {A[x], B[y]};
        w.detail = "amplitude and phase order disagree";
        return CheckResult::failure(std::move(w));
      }
    }
  }
  return CheckResult::pass();
}

}  // namespace

CheckResult is_homogeneous(const ComplexFuzzySet& A) { return pairwise_homogeneity(A, A, "homogeneity"); }

CheckResult is_mutually_homogeneous(const ComplexFuzzySet& A, const ComplexFuzzySet& B) {
  if (!A.same_carrier(B)) throw CarrierMismatch("mutual homogeneity needs sets on one carrier");
  return pairwise_homogeneity(A, B, "mutual-homogeneity");
}

std::pair<RealFuzzySet, PiFuzzySet> decompose(const ComplexFuzzySet& A) {
  const Carrier C = carrier_of(A);
  std::vector<Rational> r;
  std::vector<Rational> w;
  r.reserve(A.size());
  w.reserve(A.size());
  for (const auto& m : A.values()) {
    r.push_back(m.r());
    w.push_back(m.w_over_pi());
  }
  return {RealFuzzySet(C, std::move(r)), PiFuzzySet(C, std::move(w))};
}

ComplexFuzzySet recompose(const RealFuzzySet& r, const PiFuzzySet& w) {
  if (r.p() != w.p() || r.dim() != w.dim()) throw CarrierMismatch("amplitude and phase parts on different carriers");
  const Carrier C(r.p(), r.dim(), r.size());
  std::vector<Membership> values;
  values.reserve(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) values.emplace_back(r[i], w[i]);
  return {C, std::move(values)};
}

PiFuzzySet to_pi_fuzzy(const RealFuzzySet& F) {
  const Carrier C(F.p(), F.dim(), F.size());
  std::vector<Rational> g;
  g.reserve(F.size());
  for (const auto& v : F.values()) g.push_back(v * 2);
  return {C, std::move(g)};
}

ComplexFuzzySet intersect(const ComplexFuzzySet& A, const ComplexFuzzySet& B) {
  if (!A.same_carrier(B)) throw CarrierMismatch("intersection needs sets on one carrier");
  std::vector<Membership> values;
  values.reserve(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) values.push_back(meet(A[i], B[i]));
  return {carrier_of(A), std::move(values)};
}

ComplexFuzzySet intersect_family(std::span<const ComplexFuzzySet> family) {
  if (family.empty()) throw std::invalid_argument("intersection of an empty family");
  ComplexFuzzySet out = family.front();
  for (std::size_t i = 1; i < family.size(); ++i) out = intersect(out, family[i]);
  return out;
}

}  // namespace cfla

#pragma once

#include <cstdint>
#include <vector>

#include "cfla/carrier.hpp"
#include "cfla/crisp.hpp"
#include "cfla/fuzzy_set.hpp"
#include "cfla/hom.hpp"
#include "cfla/lie_algebra.hpp"
#include "oracle/brute.hpp"

namespace testsupport {

inline oracle::Alg to_oracle(const cfla::LieAlgebra& L) {
  oracle::Alg a;
  a.p = L.p();
  a.n = L.dim();
  for (int i = 0; i < L.dim(); ++i)
    for (int j = 0; j < L.dim(); ++j)
      for (int k = 0; k < L.dim(); ++k) a.c.push_back(L.constant(i, j, k));
  return a;
}

inline oracle::Fuzzy to_oracle(const cfla::ComplexFuzzySet& A) {
  const cfla::Carrier C(A.p(), A.dim());
  oracle::Fuzzy out;
  for (std::size_t i = 0; i < C.size(); ++i) out[C.element(i).coords] = {A[i].r(), A[i].w_over_pi()};
  return out;
}

inline oracle::Crisp to_oracle(const cfla::CrispSubset& S, const cfla::Carrier& C) {
  oracle::Crisp out;
  for (const auto& e : S.elements(C)) out.insert(e.coords);
  return out;
}

inline cfla::ComplexFuzzySet from_oracle(const oracle::Fuzzy& F, int p, int dim) {
  const cfla::Carrier C(p, dim);
  std::vector<cfla::Membership> values(C.size());
  for (const auto& [x, v] : F) values[C.index_of(cfla::Element{x})] = cfla::Membership(v.r, v.w);
  return {C, std::move(values)};
}

inline oracle::Verdict to_oracle(cfla::Verdict v) {
  switch (v) {
    case cfla::Verdict::ok: return oracle::Verdict::ok;
    case cfla::Verdict::fail: return oracle::Verdict::fail;
    default: return oracle::Verdict::not_homogeneous;
  }
}

/// splitmix64 stream for test-side generation.
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  template <typename T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

 private:
  std::uint64_t s_;
};

/// A random strictly increasing chain of positive values, returned descending.
inline std::vector<cfla::Membership> random_value_chain(TestRng& rng, std::size_t n) {
  std::vector<cfla::Membership> out;
  std::int64_t r = 10, w = 8;  // r in tenths, w in quarters of pi
  for (std::size_t i = 0; i < n && r > 0 && w > 0; ++i) {
    out.emplace_back(oracle::Q(r, 10), oracle::Q(w, 4));
    r -= 1 + static_cast<std::int64_t>(rng.below(3));
    w -= 1 + static_cast<std::int64_t>(rng.below(2));
  }
  return out;
}

/// Homogeneous but structure-blind: every element gets a random value from one chain (or zero).
inline cfla::ComplexFuzzySet random_homogeneous(TestRng& rng, const cfla::Carrier& C) {
  auto chain = random_value_chain(rng, 1 + rng.below(4));
  chain.push_back(cfla::Membership::zero());
  std::vector<cfla::Membership> values;
  for (std::size_t i = 0; i < C.size(); ++i) values.push_back(rng.pick(chain));
  return {C, std::move(values)};
}

/// Arbitrary values on a small grid; usually not homogeneous.
inline cfla::ComplexFuzzySet random_any(TestRng& rng, const cfla::Carrier& C) {
  std::vector<cfla::Membership> values;
  for (std::size_t i = 0; i < C.size(); ++i) {
    values.emplace_back(oracle::Q(static_cast<std::int64_t>(rng.below(5)), 4),
                        oracle::Q(static_cast<std::int64_t>(rng.below(5)), 2));
  }
  return {C, std::move(values)};
}

}  // namespace testsupport

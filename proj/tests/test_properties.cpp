// Library results against the brute-force oracle on seeded random inputs.
#include <doctest.h>

#include <map>

#include "cfla/catalog.hpp"
#include "cfla/fuzzy_sum.hpp"
#include "cfla/levels.hpp"
#include "cfla/predicates.hpp"
#include "cfla/theorems.hpp"
#include "support/convert.hpp"

using namespace cfla;
using testsupport::TestRng;

namespace {

struct Fixture {
  LieAlgebra L;
  Carrier C;
  oracle::Alg alg;
  std::vector<oracle::Crisp> sub;
  std::vector<oracle::Crisp> ideal;

  explicit Fixture(const LieAlgebra& algebra) : L(algebra), C(algebra), alg(testsupport::to_oracle(algebra)) {
    for (const auto& s : oracle::subspaces(alg)) {
      if (oracle::crisp_closed(alg, s, false)) sub.push_back(s);
      if (oracle::crisp_closed(alg, s, true)) ideal.push_back(s);
    }
  }
};

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = [] {
    std::vector<Fixture> v;
    for (const auto& [name, p] : std::vector<std::pair<const char*, int>>{
             {"cross3", 3}, {"heisenberg3", 3}, {"sl2", 3}, {"abelian-2", 3}, {"heisenberg3", 2}, {"abelian-2", 5}})
      v.emplace_back(make_catalog_algebra(name, p));
    return v;
  }();
  return all;
}

bool subset(const oracle::Crisp& a, const oracle::Crisp& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Nested crisp members drawn from the oracle lattice, valued by a descending chain.
oracle::Fuzzy oracle_chain_set(TestRng& rng, const Fixture& f, bool ideal,
                               const std::vector<Membership>& values) {
  const auto& pool = ideal ? f.ideal : f.sub;
  std::vector<oracle::Crisp> chain{rng.pick(pool)};
  while (chain.size() < values.size()) {
    std::vector<oracle::Crisp> bigger;
    for (const auto& s : pool)
      if (s.size() > chain.back().size() && subset(chain.back(), s)) bigger.push_back(s);
    if (bigger.empty()) break;
    chain.push_back(rng.pick(bigger));
  }
  oracle::Fuzzy out;
  for (const auto& x : oracle::all_vectors(f.alg.p, f.alg.n)) out[x] = {};
  for (std::size_t i = chain.size(); i-- > 0;)
    for (const auto& x : chain[i]) out[x] = {values[i].r(), values[i].w_over_pi()};
  return out;
}

// A chain set, sometimes with a few entries overwritten from the value palette.
ComplexFuzzySet mixed_set(TestRng& rng, const Fixture& f, bool ideal) {
  const auto values = testsupport::random_value_chain(rng, 1 + rng.below(3));
  auto A = oracle_chain_set(rng, f, ideal, values);
  if (rng.below(2)) {
    std::vector<oracle::Val> palette{{}};
    for (const auto& v : values) palette.push_back({v.r(), v.w_over_pi()});
    const auto all = oracle::all_vectors(f.alg.p, f.alg.n);
    for (std::size_t k = 0, n = 1 + rng.below(3); k < n; ++k) A[rng.pick(all)] = rng.pick(palette);
  }
  return testsupport::from_oracle(A, f.alg.p, f.alg.n);
}

struct Tally {
  int ok = 0, fail = 0;
  void add(bool v) { (v ? ok : fail)++; }
};

}  // namespace

TEST_CASE("closure predicates match the oracle on a mix of valid and invalid sets") {
  TestRng rng(101);
  Tally sub, id;
  int not_homog = 0;
  for (const auto& f : fixtures()) {
    for (int t = 0; t < 60; ++t) {
      const auto A = t % 6 == 5 ? testsupport::random_any(rng, f.C) : mixed_set(rng, f, t % 2 == 0);
      const auto oa = testsupport::to_oracle(A);
      const auto vs = is_complex_fuzzy_subalgebra(f.L, A).verdict;
      const auto vi = is_complex_fuzzy_ideal(f.L, A).verdict;
      REQUIRE(testsupport::to_oracle(vs) == oracle::fuzzy_closed(f.alg, oa, false));
      REQUIRE(testsupport::to_oracle(vi) == oracle::fuzzy_closed(f.alg, oa, true));
      if (vs == Verdict::not_homogeneous) {
        ++not_homog;
      } else {
        sub.add(vs == Verdict::ok);
        id.add(vi == Verdict::ok);
      }
    }
  }
  CHECK(sub.ok > 30);
  CHECK(sub.fail > 30);
  CHECK(id.ok > 30);
  CHECK(id.fail > 30);
  CHECK(not_homog > 10);
}

TEST_CASE("every reported witness is a genuine violation") {
  TestRng rng(55);
  for (const auto& f : fixtures()) {
    const auto alg = f.alg;
    for (int t = 0; t < 40; ++t) {
      const auto A = mixed_set(rng, f, t % 2 == 0);
      const auto oa = testsupport::to_oracle(A);
      for (bool ideal : {false, true}) {
        const auto r = ideal ? is_complex_fuzzy_ideal(f.L, A) : is_complex_fuzzy_subalgebra(f.L, A);
        if (r.verdict != Verdict::fail) continue;
        const auto& w = *r.witness;
        const auto& e = w.elements;
        auto val = [&](const Element& x) { return oa.at(x.coords); };
        if (w.condition == "scalar") {
          REQUIRE(w.scalar.has_value());
          CHECK(oracle::times(alg, static_cast<int>(*w.scalar), e[0].coords) == e[1].coords);
          CHECK_FALSE(oracle::ge(val(e[1]), val(e[0])));
        } else if (w.condition == "sum") {
          CHECK(oracle::plus(alg, e[0].coords, e[1].coords) == e[2].coords);
          CHECK_FALSE(oracle::ge(val(e[2]), oracle::lo(val(e[0]), val(e[1]))));
        } else {
          CHECK(oracle::br(alg, e[0].coords, e[1].coords) == e[2].coords);
          const auto bound = w.condition == "bracket" ? oracle::lo(val(e[0]), val(e[1])) : val(e[0]);
          CHECK_FALSE(oracle::ge(val(e[2]), bound));
        }
      }
    }
  }
}

TEST_CASE("level theorem: fuzzy predicate iff every level is a crisp subalgebra or ideal") {
  TestRng rng(7);
  Tally seen;
  for (const auto& f : fixtures()) {
    for (int t = 0; t < 60; ++t) {
      const bool ideal = t % 2 == 1;
      const auto A = mixed_set(rng, f, ideal);
      if (!is_homogeneous(A).ok()) continue;
      const auto oa = testsupport::to_oracle(A);
      const bool fuzzy = oracle::fuzzy_closed(f.alg, oa, ideal) == oracle::Verdict::ok;
      seen.add(fuzzy);
      for (bool strong : {false, true}) {
        CHECK(fuzzy == oracle::levels_closed(f.alg, oa, ideal, strong));
        CHECK(check_level_theorem(f.L, A, ideal ? Mode::ideal : Mode::subalgebra,
                                  strong ? Strength::strong : Strength::upper)
                  .ok());
      }
    }
  }
  CHECK(seen.ok > 30);
  CHECK(seen.fail > 30);
}

TEST_CASE("upper and strong levels match the oracle") {
  TestRng rng(9);
  for (const auto& f : fixtures()) {
    for (int t = 0; t < 20; ++t) {
      const auto A = mixed_set(rng, f, false);
      const auto oa = testsupport::to_oracle(A);
      for (const auto& t0 : oracle::image(oa)) {
        const Membership m(t0.r, t0.w);
        CHECK(testsupport::to_oracle(upper_level(A, m), f.C) == oracle::upper(oa, t0, false));
        CHECK(testsupport::to_oracle(strong_upper_level(A, m), f.C) == oracle::upper(oa, t0, true));
      }
    }
  }
}

TEST_CASE("decomposition: complex predicate iff both parts pass") {
  TestRng rng(13);
  for (const auto& f : fixtures()) {
    for (int t = 0; t < 40; ++t) {
      const bool ideal = t % 2 == 1;
      const auto A = mixed_set(rng, f, ideal);
      if (!is_homogeneous(A).ok()) continue;
      std::map<oracle::Vec, oracle::Q> r, w;
      for (const auto& [x, v] : testsupport::to_oracle(A)) {
        r[x] = v.r;
        w[x] = v.w;
      }
      const auto mode = ideal ? Mode::ideal : Mode::subalgebra;
      const bool expect = oracle::scalar_closed(f.alg, r, ideal) && oracle::scalar_closed(f.alg, w, ideal);
      CHECK(is_complex_fuzzy(f.L, A, mode).ok() == expect);
      const auto [rp, wp] = decompose(A);
      CHECK(is_real_fuzzy(f.L, rp, mode).ok() == oracle::scalar_closed(f.alg, r, ideal));
      CHECK(is_pi_fuzzy(f.L, wp, mode).ok() == oracle::scalar_closed(f.alg, w, ideal));
      CHECK(check_decomposition_theorem(f.L, A).ok());
    }
  }
}

TEST_CASE("pi scaling preserves both predicates") {
  TestRng rng(15);
  Tally seen;
  for (const auto& f : fixtures()) {
    for (int t = 0; t < 40; ++t) {
      const auto A = t % 3 == 2 ? testsupport::random_any(rng, f.C) : mixed_set(rng, f, t % 2 == 0);
      const auto F = decompose(A).first;
      for (auto mode : {Mode::subalgebra, Mode::ideal}) {
        std::map<oracle::Vec, oracle::Q> r;
        for (const auto& [x, v] : testsupport::to_oracle(A)) r[x] = v.r;
        const bool expect = oracle::scalar_closed(f.alg, r, mode == Mode::ideal);
        seen.add(expect);
        CHECK(is_real_fuzzy(f.L, F, mode).ok() == expect);
        CHECK(is_pi_fuzzy(f.L, to_pi_fuzzy(F), mode).ok() == expect);
        CHECK(check_pi_scaling(f.L, F, mode).ok());
      }
    }
  }
  CHECK(seen.ok > 20);
  CHECK(seen.fail > 20);
}

TEST_CASE("negation lemma clauses hold on every generated subalgebra") {
  TestRng rng(17);
  int checked = 0;
  for (const auto& f : fixtures()) {
    for (int t = 0; t < 40; ++t) {
      const auto A = mixed_set(rng, f, false);
      if (!is_complex_fuzzy_subalgebra(f.L, A).ok()) continue;
      ++checked;
      CHECK(check_negation_lemma(f.L, A).ok());
      const auto oa = testsupport::to_oracle(A);
      const auto zero = oracle::Vec(static_cast<std::size_t>(f.alg.n), 0);
      for (const auto& [x, vx] : oa) {
        CHECK(oa.at(oracle::times(f.alg, f.alg.p - 1, x)) == vx);
        for (const auto& [y, vy] : oa) {
          const auto d = oracle::plus(f.alg, x, oracle::times(f.alg, f.alg.p - 1, y));
          if (oa.at(d) == oa.at(zero)) CHECK(vx == vy);
        }
      }
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("fuzzy sum matches the oracle, and sums of mutually homogeneous ideals are ideals") {
  TestRng rng(19);
  int theorem_cases = 0;
  for (const auto& f : fixtures()) {
    for (int t = 0; t < 25; ++t) {
      const auto A = testsupport::random_any(rng, f.C);
      const auto B = testsupport::random_homogeneous(rng, f.C);
      CHECK(testsupport::to_oracle(fuzzy_sum(f.L, A, B)) ==
            oracle::sum(f.alg, testsupport::to_oracle(A), testsupport::to_oracle(B)));

      const auto values = testsupport::random_value_chain(rng, 4);
      std::vector<Membership> va, vb;
      for (const auto& v : values) (rng.below(2) ? va : vb).push_back(v);
      if (va.empty() || vb.empty()) continue;
      const auto X = testsupport::from_oracle(oracle_chain_set(rng, f, true, va), f.alg.p, f.alg.n);
      const auto Y = testsupport::from_oracle(oracle_chain_set(rng, f, true, vb), f.alg.p, f.alg.n);
      if (sum_ideal_hypothesis_gap(f.L, X, Y)) continue;
      ++theorem_cases;
      const auto S = oracle::sum(f.alg, testsupport::to_oracle(X), testsupport::to_oracle(Y));
      CHECK(oracle::fuzzy_closed(f.alg, S, true) == oracle::Verdict::ok);
      CHECK(check_sum_ideal_theorem(f.L, X, Y).ok());
    }
  }
  CHECK(theorem_cases > 40);
}

TEST_CASE("intersections of mutually homogeneous families stay closed") {
  TestRng rng(23);
  int cases = 0;
  for (const auto& f : fixtures()) {
    for (int t = 0; t < 30; ++t) {
      const bool ideal = t % 2 == 1;
      const auto values = testsupport::random_value_chain(rng, 5);
      std::vector<ComplexFuzzySet> fam;
      std::vector<oracle::Fuzzy> ofam;
      for (std::size_t k = 0, n = 2 + rng.below(3); k < n; ++k) {
        std::vector<Membership> sub;
        for (const auto& v : values)
          if (rng.below(2)) sub.push_back(v);
        if (sub.empty()) sub.push_back(values.back());
        ofam.push_back(oracle_chain_set(rng, f, ideal, sub));
        fam.push_back(testsupport::from_oracle(ofam.back(), f.alg.p, f.alg.n));
      }
      const auto mode = ideal ? Mode::ideal : Mode::subalgebra;
      CHECK(testsupport::to_oracle(intersect_family(fam)) == oracle::meet_all(ofam));
      if (intersection_hypothesis_gap(f.L, fam, mode)) continue;
      ++cases;
      CHECK(oracle::fuzzy_closed(f.alg, oracle::meet_all(ofam), ideal) == oracle::Verdict::ok);
      CHECK(check_intersection_theorems(f.L, fam, mode).ok());
    }
  }
  CHECK(cases > 60);
}

TEST_CASE("level cuts match the oracle") {
  TestRng rng(29);
  for (const auto& f : fixtures()) {
    for (int t = 0; t < 10; ++t) {
      const auto A = testsupport::random_any(rng, f.C);
      const auto oa = testsupport::to_oracle(A);
      for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
          for (int flags = 0; flags < 4; ++flags) {
            const LevelSpec spec{Rational(a, 4), Rational(b, 2), (flags & 1) != 0, (flags & 2) != 0};
            CHECK(testsupport::to_oracle(level_cut(A, spec), f.C) ==
                  oracle::cut(oa, spec.alpha, spec.beta_over_pi, spec.strict_r, spec.strict_w));
          }
    }
  }
}

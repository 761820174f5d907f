#include <doctest.h>

#include "cfla/catalog.hpp"
#include "cfla/chain.hpp"
#include "cfla/crisp.hpp"
#include "cfla/errors.hpp"
#include "cfla/hom.hpp"
#include "cfla/hom_theorems.hpp"
#include "cfla/levels.hpp"
#include "cfla/predicates.hpp"
#include "support/convert.hpp"

using namespace cfla;

namespace {

Membership m(std::int64_t rn, std::int64_t rd, std::int64_t wn, std::int64_t wd) {
  return {Rational(rn, rd), Rational(wn, wd)};
}

Element el(std::vector<int> v) { return Element{std::move(v)}; }

const LieHom& find_hom(const std::vector<LieHom>& homs, const std::string& name) {
  for (const auto& h : homs)
    if (h.name() == name) return h;
  FAIL("missing hom " << name);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("rank over F_p") {
  const FieldPrime f5(5);
  CHECK(rank_mod_p({{1, 2}, {2, 4}}, f5) == 1);
  CHECK(rank_mod_p({{1, 2}, {3, 4}}, f5) == 2);
  CHECK(rank_mod_p({{1, 1}, {1, 1}}, FieldPrime(2)) == 1);
  CHECK(rank_mod_p({{2, 1}, {1, 3}}, f5) == 1);  // 2*3 - 1 = 5 = 0 mod 5
  CHECK(rank_mod_p({{0, 0, 0}}, f5) == 0);
  CHECK(rank_mod_p({}, f5) == 0);
}

TEST_CASE("hom construction checks shape and field") {
  const auto c5 = make_catalog_algebra("cross3", 5);
  const auto c3 = make_catalog_algebra("cross3", 3);
  CHECK_THROWS_AS(LieHom("x", c5, c3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(LieHom("x", c5, c5, {{1, 0, 0}, {0, 1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(LieHom("x", c5, c5, {{1, 0}, {0, 1}, {0, 0}}), std::invalid_argument);
  const LieHom neg("neg", c5, c5, {{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}});
  CHECK(neg.entry(0, 0) == 4);
}

TEST_CASE("validate_hom examples") {
  const auto c5 = make_catalog_algebra("cross3", 5);
  const auto id = validate_hom(identity_hom(c5));
  CHECK(id.result.ok());
  CHECK(id.surjective);
  CHECK(id.rank == 3);

  const LieHom twice("twice", c5, c5, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  const auto bad = validate_hom(twice);
  REQUIRE(bad.result.verdict == Verdict::fail);
  CHECK(bad.result.witness->condition == "bracket-preservation");
  CHECK(bad.result.witness->indices == std::vector<int>{0, 1});
  CHECK(bad.result.witness->elements == std::vector<Element>{el({0, 0, 2}), el({0, 0, 4})});
  CHECK_THROWS_AS(preimage_cfs(twice, ComplexFuzzySet::constant(Carrier(c5), Membership::zero())), PreconditionError);

  for (int p : {2, 3, 5}) {
    for (const auto& h : catalog_homs(p)) {
      CAPTURE(h.name());
      CHECK(validate_hom(h).result.ok());
      CHECK(oracle::preserves_bracket(testsupport::to_oracle(h.source()), testsupport::to_oracle(h.target()),
                                      h.matrix()));
      CHECK(h.surjective() == oracle::surjective(testsupport::to_oracle(h.source()),
                                                 testsupport::to_oracle(h.target()), h.matrix()));
    }
  }
  const auto homs = catalog_homs(3);
  CHECK(find_hom(homs, "proj-heisenberg3-abelian-2").surjective());
  CHECK_FALSE(find_hom(homs, "embed-abelian-2-heisenberg3").surjective());
}

TEST_CASE("the projection onto e3 is not a hom of the Heisenberg algebra") {
  const auto h = make_catalog_algebra("heisenberg3", 3);
  const auto a1 = make_catalog_algebra("abelian-1", 3);
  CHECK_FALSE(validate_hom(LieHom("e3", h, a1, {{0, 0, 1}})).result.ok());
}

TEST_CASE("preimage and image agree with the oracle") {
  const auto homs = catalog_homs(3);
  testsupport::TestRng rng(17);
  for (const auto& h : homs) {
    CAPTURE(h.name());
    const Carrier src(h.source()), dst(h.target());
    const auto S = testsupport::to_oracle(h.source());
    const auto T = testsupport::to_oracle(h.target());
    for (int t = 0; t < 5; ++t) {
      const auto B = testsupport::random_any(rng, dst);
      CHECK(testsupport::to_oracle(preimage_cfs(h, B)) == oracle::preimage(S, h.matrix(), testsupport::to_oracle(B)));
      const auto A = testsupport::random_any(rng, src);
      CHECK(testsupport::to_oracle(image_cfs(h, A)) == oracle::image_of(S, T, h.matrix(), testsupport::to_oracle(A)));
    }
    CHECK_THROWS_AS(preimage_cfs(h, ComplexFuzzySet::constant(Carrier(3, 4), Membership::zero())), CarrierMismatch);
  }
}

TEST_CASE("image of a set under the projection takes fiber suprema") {
  const auto homs = catalog_homs(3);
  const auto& proj = find_hom(homs, "proj-heisenberg3-abelian-1");
  const Carrier src(proj.source());
  std::vector<Membership> v(src.size());
  v[src.index_of(el({1, 0, 0}))] = m(1, 2, 1, 2);
  v[src.index_of(el({1, 2, 2}))] = m(1, 4, 1, 1);
  const auto img = image_cfs(proj, ComplexFuzzySet(src, v));
  CHECK(img[1] == m(1, 2, 1, 1));
  CHECK(img[0] == Membership::zero());
  CHECK(img[2] == Membership::zero());
  // Outside the image the value is zero.
  const auto& emb = find_hom(homs, "embed-abelian-1-abelian-2");
  const auto up = image_cfs(emb, ComplexFuzzySet::constant(Carrier(emb.source()), m(1, 3, 1, 3)));
  CHECK(up[Carrier(emb.target()).index_of(el({0, 1}))] == Membership::zero());
  CHECK(up[Carrier(emb.target()).index_of(el({2, 0}))] == m(1, 3, 1, 3));
}

TEST_CASE("hom theorem names") {
  for (auto t : {HomTheorem::preimage_subalgebra, HomTheorem::preimage_ideal, HomTheorem::image_subalgebra,
                 HomTheorem::image_ideal, HomTheorem::sum_commutation})
    CHECK(parse_hom_theorem(to_string(t)) == t);
  CHECK(to_string(HomTheorem::image_ideal) == "image-ideal");
  CHECK_FALSE(parse_hom_theorem("image").has_value());
}

TEST_CASE("hom theorems on the Heisenberg projection") {
  const auto homs = catalog_homs(3);
  const auto& proj = find_hom(homs, "proj-heisenberg3-abelian-2");
  const Carrier src(proj.source()), dst(proj.target());
  const auto line = span_of(dst, {static_cast<std::uint32_t>(dst.index_of(el({1, 0})))});
  const auto B = generate_from_chain(proj.target(), ChainSpec{{line}, {m(3, 4, 1, 1)}, Mode::ideal});
  CHECK(check_hom_theorem(HomTheorem::preimage_ideal, proj, B).ok());
  CHECK(check_hom_theorem(HomTheorem::preimage_subalgebra, proj, B).ok());
  const auto pre = preimage_cfs(proj, B);
  CHECK(pre[src.index_of(el({2, 0, 1}))] == m(3, 4, 1, 1));
  CHECK(pre[src.index_of(el({0, 1, 0}))] == Membership::zero());

  const auto centre = span_of(src, {static_cast<std::uint32_t>(src.index_of(el({0, 0, 1})))});
  const auto A = generate_from_chain(proj.source(), ChainSpec{{centre}, {m(1, 2, 1, 2)}, Mode::ideal});
  CHECK(check_hom_theorem(HomTheorem::image_ideal, proj, A).ok());
  CHECK(check_hom_theorem(HomTheorem::sum_commutation, proj, A, &pre).ok());

  CHECK_THROWS(hom_hypothesis_gap(HomTheorem::sum_commutation, proj, A));
  const auto& emb = find_hom(homs, "embed-abelian-2-heisenberg3");
  const auto E = ComplexFuzzySet::constant(Carrier(emb.source()), m(1, 2, 1, 2));
  CHECK(hom_hypothesis_gap(HomTheorem::image_subalgebra, emb, E).has_value());
  CHECK_THROWS_AS(check_hom_theorem(HomTheorem::image_ideal, emb, E), PreconditionError);
  // Without surjectivity: e1 carries more than e2, and [e1, e2] = e3 = phi(e2) in the target.
  const Carrier esrc(emb.source());
  const auto e1 = span_of(esrc, {static_cast<std::uint32_t>(esrc.index_of(el({1, 0})))});
  const auto F = generate_from_chain(emb.source(), ChainSpec{{e1, CrispSubset::whole(esrc)},
                                                             {m(3, 4, 1, 1), m(1, 4, 1, 4)}, Mode::ideal});
  REQUIRE(is_complex_fuzzy_ideal(emb.source(), F).ok());
  const auto concl = hom_theorem_conclusion(HomTheorem::image_ideal, emb, F);
  REQUIRE(concl.verdict == Verdict::fail);
  CHECK(concl.witness->condition == "bracket-ideal");
  CHECK(hom_theorem_conclusion(HomTheorem::image_subalgebra, emb, F).ok());
  CHECK(hom_theorem_conclusion(HomTheorem::image_subalgebra, emb, E).ok());
}

TEST_CASE("level cuts commute with preimages across a grid and all strictness variants") {
  const auto homs = catalog_homs(3);
  testsupport::TestRng rng(21);
  int pairs = 0;
  for (const auto& h : homs) {
    const Carrier dst(h.target());
    const auto T = testsupport::to_oracle(h.source());
    for (int t = 0; t < 3; ++t) {
      const auto B = testsupport::random_any(rng, dst);
      ++pairs;
      for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
          for (int flags = 0; flags < 4; ++flags) {
            const LevelSpec spec{Rational(a, 4), Rational(b, 2), (flags & 1) != 0, (flags & 2) != 0};
            REQUIRE(check_levelcut_commutation(h, B, spec).ok());
            const auto pre = oracle::preimage(T, h.matrix(), testsupport::to_oracle(B));
            const auto lhs = oracle::cut(pre, spec.alpha, spec.beta_over_pi, spec.strict_r, spec.strict_w);
            const Carrier src(h.source());
            CHECK(testsupport::to_oracle(level_cut(preimage_cfs(h, B), spec), src) == lhs);
          }
    }
  }
  CHECK(pairs >= 20);
}

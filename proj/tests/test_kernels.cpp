#include <doctest.h>

#include <cstdlib>
#include <vector>

#include "cfla/kernels.hpp"
#include "support/convert.hpp"

using namespace cfla;

namespace {

struct Case {
  std::vector<Code> codes;
  std::vector<std::int32_t> target;
  std::vector<Code> partner;
  Code x;
};

Code random_code(testsupport::TestRng& rng, std::uint32_t ranks) {
  return pack_code(static_cast<std::uint32_t>(rng.below(ranks)), static_cast<std::uint32_t>(rng.below(ranks)));
}

// Codes biased high so that the first failing index lands at varied positions, including past the end.
Case random_case(testsupport::TestRng& rng, std::size_t n, std::uint32_t ranks) {
  Case c;
  const std::size_t carrier = 1 + rng.below(200);
  for (std::size_t i = 0; i < carrier; ++i) {
    c.codes.push_back(rng.below(8) ? pack_code(ranks - 1, ranks - 1) : random_code(rng, ranks));
  }
  for (std::size_t i = 0; i < n; ++i) {
    c.target.push_back(static_cast<std::int32_t>(rng.below(carrier)));
    c.partner.push_back(random_code(rng, ranks));
  }
  c.x = random_code(rng, ranks);
  return c;
}

std::size_t reference_first_below_meet(const Case& c) {
  for (std::size_t i = 0; i < c.target.size(); ++i)
    if (!kernels::dominates(c.codes[c.target[i]], kernels::meet(c.x, c.partner[i]))) return i;
  return c.target.size();
}

}  // namespace

TEST_CASE("code helpers") {
  CHECK(kernels::meet(pack_code(3, 1), pack_code(1, 3)) == pack_code(1, 1));
  CHECK(kernels::join(pack_code(3, 1), pack_code(1, 3)) == pack_code(3, 3));
  CHECK(kernels::dominates(pack_code(2, 2), pack_code(2, 1)));
  CHECK_FALSE(kernels::dominates(pack_code(2, 2), pack_code(3, 0)));
}

TEST_CASE("scalar kernels match a direct reference") {
  testsupport::TestRng rng(99);
  const auto& k = kernels::scalar_kernels();
  for (int t = 0; t < 2000; ++t) {
    const auto c = random_case(rng, rng.below(70), 1 + static_cast<std::uint32_t>(rng.below(6)));
    CHECK(k.first_below_meet(c.codes.data(), c.target.data(), c.x, c.partner.data(), c.target.size()) ==
          reference_first_below_meet(c));
  }
}

TEST_CASE("AVX2 kernels agree with the scalar kernels") {
  const auto* avx = kernels::avx2_kernels();
  if (avx == nullptr || !kernels::isa_available(kernels::Isa::avx2)) {
    MESSAGE("AVX2 variant unavailable; skipped");
    return;
  }
  const auto& sc = kernels::scalar_kernels();
  testsupport::TestRng rng(1234);
  for (int t = 0; t < 5000; ++t) {
    const std::uint32_t ranks = 1 + static_cast<std::uint32_t>(rng.below(t % 3 == 0 ? 70000 : 6));
    const auto c = random_case(rng, rng.below(90), ranks > 65535 ? 65535 : ranks);
    const auto n = c.target.size();
    REQUIRE(avx->first_below_meet(c.codes.data(), c.target.data(), c.x, c.partner.data(), n) ==
            sc.first_below_meet(c.codes.data(), c.target.data(), c.x, c.partner.data(), n));
    REQUIRE(avx->first_below(c.codes.data(), c.target.data(), c.x, n) ==
            sc.first_below(c.codes.data(), c.target.data(), c.x, n));

    std::vector<Code> out_a(n), out_b(n);
    for (std::size_t i = 0; i < n; ++i) out_a[i] = out_b[i] = c.partner[i];
    avx->maxmin_accumulate(out_a.data(), c.codes.data(), c.target.data(), c.x, n);
    sc.maxmin_accumulate(out_b.data(), c.codes.data(), c.target.data(), c.x, n);
    REQUIRE(out_a == out_b);
  }
}

TEST_CASE("maxmin accumulate reference") {
  const std::vector<Code> values{pack_code(1, 4), pack_code(5, 0), pack_code(2, 2)};
  const std::vector<std::int32_t> index{0, 1, 2, 2};
  std::vector<Code> out{pack_code(0, 0), pack_code(0, 3), pack_code(3, 3), pack_code(0, 0)};
  kernels::scalar_kernels().maxmin_accumulate(out.data(), values.data(), index.data(), pack_code(3, 3), out.size());
  CHECK(out == std::vector<Code>{pack_code(1, 3), pack_code(3, 3), pack_code(3, 3), pack_code(2, 2)});
}

TEST_CASE("dispatch honours the environment and explicit selection") {
  const bool forced = std::getenv("CFLA_FORCE_SCALAR") != nullptr;
  if (forced || !kernels::isa_available(kernels::Isa::avx2)) {
    CHECK(kernels::active_isa() == kernels::Isa::scalar);
    CHECK(kernels::active().name == kernels::scalar_kernels().name);
  } else {
    CHECK(kernels::active_isa() == kernels::Isa::avx2);
  }
  const auto before = kernels::active_isa();
  kernels::select(kernels::Isa::scalar);
  CHECK(kernels::active_isa() == kernels::Isa::scalar);
  if (kernels::isa_available(kernels::Isa::avx2)) {
    kernels::select(kernels::Isa::avx2);
    CHECK(kernels::active_isa() == kernels::Isa::avx2);
  } else {
    CHECK_THROWS_AS(kernels::select(kernels::Isa::avx2), std::runtime_error);
  }
  kernels::select(before);
}

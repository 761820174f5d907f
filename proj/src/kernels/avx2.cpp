#include "cfla/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace cfla::kernels {

#if defined(__AVX2__)

namespace {

// Codes are two u16 ranks per 32-bit lane, so epu16 min/max act componentwise.
// A lane dominates iff max(a, b) == a in both halves, i.e. the whole 32-bit lane compares equal.

inline __m256i gather(const Code* codes, const std::int32_t* target) {
  const __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(target));
  return _mm256_i32gather_epi32(reinterpret_cast<const int*>(codes), idx, 4);
}

inline unsigned violation_mask(__m256i have, __m256i need) {
  const __m256i ok = _mm256_cmpeq_epi32(_mm256_max_epu16(have, need), have);
  return ~static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(ok))) & 0xFFU;
}

std::size_t first_below_meet_avx2(const Code* codes, const std::int32_t* target, Code x, const Code* partner,
                                  std::size_t n) {
  const __m256i vx = _mm256_set1_epi32(static_cast<int>(x));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i have = gather(codes, target + i);
    const __m256i need = _mm256_min_epu16(vx, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(partner + i)));
    if (const unsigned bad = violation_mask(have, need)) return i + static_cast<std::size_t>(__builtin_ctz(bad));
  }
  return i + scalar_kernels().first_below_meet(codes, target + i, x, partner + i, n - i);
}

std::size_t first_below_avx2(const Code* codes, const std::int32_t* target, Code bound, std::size_t n) {
  const __m256i need = _mm256_set1_epi32(static_cast<int>(bound));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    if (const unsigned bad = violation_mask(gather(codes, target + i), need)) {
      return i + static_cast<std::size_t>(__builtin_ctz(bad));
    }
  }
  return i + scalar_kernels().first_below(codes, target + i, bound, n - i);
}

void maxmin_accumulate_avx2(Code* out, const Code* values, const std::int32_t* index, Code cap, std::size_t n) {
  const __m256i vcap = _mm256_set1_epi32(static_cast<int>(cap));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    auto* dst = reinterpret_cast<__m256i*>(out + i);
    const __m256i cand = _mm256_min_epu16(vcap, gather(values, index + i));
    _mm256_storeu_si256(dst, _mm256_max_epu16(_mm256_loadu_si256(dst), cand));
  }
  scalar_kernels().maxmin_accumulate(out + i, values, index + i, cap, n - i);
}

constexpr KernelTable kAvx2{"avx2", first_below_meet_avx2, first_below_avx2, maxmin_accumulate_avx2};

}  // namespace

const KernelTable* avx2_kernels() { return &kAvx2; }

#else

const KernelTable* avx2_kernels() { return nullptr; }

#endif

}  // namespace cfla::kernels

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "cfla/codebook.hpp"

namespace cfla::kernels {

/// Componentwise operations on packed codes.
inline constexpr Code meet(Code a, Code b) {
  return pack_code(r_rank(a) < r_rank(b) ? r_rank(a) : r_rank(b), w_rank(a) < w_rank(b) ? w_rank(a) : w_rank(b));
}
inline constexpr Code join(Code a, Code b) {
  return pack_code(r_rank(a) > r_rank(b) ? r_rank(a) : r_rank(b), w_rank(a) > w_rank(b) ? w_rank(a) : w_rank(b));
}
/// a >= b componentwise.
inline constexpr bool dominates(Code a, Code b) { return r_rank(a) >= r_rank(b) && w_rank(a) >= w_rank(b); }

/// The inner loops of the closure checks and the fuzzy sum. Every entry point
/// has a scalar reference and, on x86-64 with AVX2, a vector variant that must
/// agree with it exactly.
struct KernelTable {
  std::string_view name;

  /// First i with !dominates(codes[target[i]], meet(x, partner[i])), or n.
  std::size_t (*first_below_meet)(const Code* codes, const std::int32_t* target, Code x, const Code* partner,
                                  std::size_t n);
  /// First i with !dominates(codes[target[i]], bound), or n.
  std::size_t (*first_below)(const Code* codes, const std::int32_t* target, Code bound, std::size_t n);
  /// out[i] = join(out[i], meet(cap, values[index[i]])) for i < n.
  void (*maxmin_accumulate)(Code* out, const Code* values, const std::int32_t* index, Code cap, std::size_t n);
};

enum class Isa { scalar, avx2 };

const KernelTable& scalar_kernels();
/// nullptr when the AVX2 variant was not compiled in.
const KernelTable* avx2_kernels();

/// Whether the running CPU can execute the given variant.
bool isa_available(Isa isa);
/// Kernels selected at first use: AVX2 when available, unless the environment
/// variable CFLA_FORCE_SCALAR is set.
const KernelTable& active();
/// Overrides the selection for the rest of the process. Throws std::runtime_error if unavailable.
void select(Isa isa);
Isa active_isa();

// Span conveniences over the active table.
inline std::size_t first_below_meet(std::span<const Code> codes, std::span<const std::int32_t> target, Code x,
                                    std::span<const Code> partner) {
  return active().first_below_meet(codes.data(), target.data(), x, partner.data(), target.size());
}
inline std::size_t first_below(std::span<const Code> codes, std::span<const std::int32_t> target, Code bound) {
  return active().first_below(codes.data(), target.data(), bound, target.size());
}
inline void maxmin_accumulate(std::span<Code> out, std::span<const Code> values, std::span<const std::int32_t> index,
                              Code cap) {
  active().maxmin_accumulate(out.data(), values.data(), index.data(), cap, out.size());
}

}  // namespace cfla::kernels

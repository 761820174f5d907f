#include "cfla/kernels.hpp"

namespace cfla::kernels {

namespace {

std::size_t first_below_meet_scalar(const Code* codes, const std::int32_t* target, Code x, const Code* partner,
                                    std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (!dominates(codes[target[i]], meet(x, partner[i]))) return i;
  }
  return n;
}

std::size_t first_below_scalar(const Code* codes, const std::int32_t* target, Code bound, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (!dominates(codes[target[i]], bound)) return i;
  }
  return n;
}

void maxmin_accumulate_scalar(Code* out, const Code* values, const std::int32_t* index, Code cap, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = join(out[i], meet(cap, values[index[i]]));
}

constexpr KernelTable kScalar{"scalar", first_below_meet_scalar, first_below_scalar, maxmin_accumulate_scalar};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace cfla::kernels

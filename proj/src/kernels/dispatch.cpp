#include <atomic>
#include <cstdlib>
#include <stdexcept>

#include "cfla/kernels.hpp"

namespace cfla::kernels {

namespace {

const KernelTable* pick_default() {
  if (std::getenv("CFLA_FORCE_SCALAR") == nullptr && isa_available(Isa::avx2)) return avx2_kernels();
  return &scalar_kernels();
}

std::atomic<const KernelTable*>& slot() {
  static std::atomic<const KernelTable*> table{pick_default()};
  return table;
}

}  // namespace

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(__i386__)
      return avx2_kernels() != nullptr && __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& active() { return *slot().load(std::memory_order_acquire); }

void select(Isa isa) {
  if (!isa_available(isa)) throw std::runtime_error("requested kernel variant is not available on this CPU");
  slot().store(isa == Isa::avx2 ? avx2_kernels() : &scalar_kernels(), std::memory_order_release);
}

Isa active_isa() { return &active() == &scalar_kernels() ? Isa::scalar : Isa::avx2; }

}  // namespace cfla::kernels

#include "partycred/kernels.hpp"

#include <atomic>

namespace partycred::kernels {
namespace {

Isa probe() {
#if defined(__x86_64__) || defined(_M_X64)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

std::atomic<Isa>& selected() {
  static std::atomic<Isa> isa{detected_isa()};
  return isa;
}

}  // namespace

Isa detected_isa() {
  static const Isa isa = probe();
  return isa;
}

Isa active_isa() { return selected().load(std::memory_order_relaxed); }

Isa set_isa(Isa isa) {
  if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) isa = Isa::Scalar;
  selected().store(isa, std::memory_order_relaxed);
  return isa;
}

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void pairwise_accumulate(std::span<std::int64_t> matrix, std::span<const std::int32_t> positions,
                         std::int64_t weight) {
  if (active_isa() == Isa::Avx2) {
    avx2::pairwise_accumulate(matrix, positions, weight);
  } else {
    scalar::pairwise_accumulate(matrix, positions, weight);
  }
}

SignCounts count_signs(std::span<const std::int64_t> values, std::int64_t skip) {
  if (active_isa() == Isa::Avx2) return avx2::count_signs(values, skip);
  return scalar::count_signs(values, skip);
}

}  // namespace partycred::kernels

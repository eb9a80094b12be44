#pragma once

// Data-parallel inner loops shared by the pairwise rules and the search code.
// Every kernel has a scalar reference and an AVX2 variant; the variant is
// picked once at startup from CPUID and can be pinned for testing.

#include <cstdint>
#include <span>
#include <string_view>

namespace partycred::kernels {

enum class Isa { Scalar, Avx2 };

/// Best ISA the running CPU supports.
Isa detected_isa();

/// ISA used by the dispatching entry points below.
Isa active_isa();

/// Pins dispatch to `isa`. Requesting Avx2 on a CPU without it falls back to
/// Scalar; the return value is what actually got selected.
Isa set_isa(Isa isa);

std::string_view isa_name(Isa isa);

struct SignCounts {
  std::int64_t positive = 0;
  std::int64_t zero = 0;
};

/// For every row candidate c: row_c[d] += weight when positions[c] < positions[d].
/// `matrix` is m x m row-major, `positions` holds each candidate's 0-based rank.
void pairwise_accumulate(std::span<std::int64_t> matrix, std::span<const std::int32_t> positions,
                         std::int64_t weight);

/// Counts strictly positive and zero entries of `values`, skipping index `skip`
/// (pass a negative value to skip nothing).
SignCounts count_signs(std::span<const std::int64_t> values, std::int64_t skip);

namespace scalar {
void pairwise_accumulate(std::span<std::int64_t> matrix, std::span<const std::int32_t> positions,
                         std::int64_t weight);
SignCounts count_signs(std::span<const std::int64_t> values, std::int64_t skip);
}  // namespace scalar

namespace avx2 {
void pairwise_accumulate(std::span<std::int64_t> matrix, std::span<const std::int32_t> positions,
                         std::int64_t weight);
SignCounts count_signs(std::span<const std::int64_t> values, std::int64_t skip);
}  // namespace avx2

}  // namespace partycred::kernels

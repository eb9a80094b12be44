#include "partycred/kernels.hpp"

#include <cstddef>

namespace partycred::kernels::scalar {

void pairwise_accumulate(std::span<std::int64_t> matrix, std::span<const std::int32_t> positions,
                         std::int64_t weight) {
  const std::size_t m = positions.size();
  for (std::size_t c = 0; c < m; ++c) {
    const std::int32_t rc = positions[c];
    std::int64_t* row = matrix.data() + c * m;
    for (std::size_t d = 0; d < m; ++d) {
      if (rc < positions[d]) row[d] += weight;
    }
  }
}

SignCounts count_signs(std::span<const std::int64_t> values, std::int64_t skip) {
  SignCounts out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (static_cast<std::int64_t>(i) == skip) continue;
    if (values[i] > 0) {
      ++out.positive;
    } else if (values[i] == 0) {
      ++out.zero;
    }
  }
  return out;
}

}  // namespace partycred::kernels::scalar

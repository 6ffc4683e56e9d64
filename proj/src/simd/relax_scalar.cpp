#include "rlpc/simd/relax.hpp"

namespace rlpc::simd {

void relax_scalar(double* cost, std::uint32_t* pred, std::size_t count, double offer,
                  std::uint32_t pred_value) noexcept {
  for (std::size_t i = 0; i < count; ++i) {
    if (cost[i] > offer) {
      cost[i] = offer;
      pred[i] = pred_value;
    }
  }
}

}  // namespace rlpc::simd

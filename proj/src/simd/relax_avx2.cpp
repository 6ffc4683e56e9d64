#include <immintrin.h>

#include "rlpc/simd/relax.hpp"

namespace rlpc::simd {

void relax_avx2(double* cost, std::uint32_t* pred, std::size_t count, double offer,
                std::uint32_t pred_value) noexcept {
  const __m256d offer_v = _mm256_set1_pd(offer);
  const __m128i pred_v = _mm_set1_epi32(static_cast<int>(pred_value));
  // Gathers the low dword of each 64-bit mask lane into the bottom 128 bits.
  const __m256i pack = _mm256_setr_epi32(0, 2, 4, 6, 0, 2, 4, 6);
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256d current = _mm256_loadu_pd(cost + i);
    const __m256d gt = _mm256_cmp_pd(current, offer_v, _CMP_GT_OQ);
    if (_mm256_movemask_pd(gt) == 0) continue;
    _mm256_maskstore_pd(cost + i, _mm256_castpd_si256(gt), offer_v);
    const __m128i mask32 =
        _mm256_castsi256_si128(_mm256_permutevar8x32_epi32(_mm256_castpd_si256(gt), pack));
    _mm_maskstore_epi32(reinterpret_cast<int*>(pred + i), mask32, pred_v);
  }
  relax_scalar(cost + i, pred + i, count - i, offer, pred_value);
}

}  // namespace rlpc::simd

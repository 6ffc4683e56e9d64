#include <immintrin.h>

#include "rlpc/simd/relax.hpp"

namespace rlpc::simd {

void relax_avx512(double* cost, std::uint32_t* pred, std::size_t count, double offer,
                  std::uint32_t pred_value) noexcept {
  const __m512d offer_v = _mm512_set1_pd(offer);
  const __m256i pred_v = _mm256_set1_epi32(static_cast<int>(pred_value));
  std::size_t i = 0;
  for (; i + 8 <= count; i += 8) {
    const __mmask8 gt = _mm512_cmp_pd_mask(_mm512_loadu_pd(cost + i), offer_v, _CMP_GT_OQ);
    if (gt == 0) continue;
    _mm512_mask_storeu_pd(cost + i, gt, offer_v);
    _mm256_mask_storeu_epi32(pred + i, gt, pred_v);
  }
  if (i < count) {
    const __mmask8 tail = static_cast<__mmask8>((1u << (count - i)) - 1u);
    const __m512d current = _mm512_mask_loadu_pd(offer_v, tail, cost + i);
    const __mmask8 gt = _mm512_mask_cmp_pd_mask(tail, current, offer_v, _CMP_GT_OQ);
    _mm512_mask_storeu_pd(cost + i, gt, offer_v);
    _mm256_mask_storeu_epi32(pred + i, gt, pred_v);
  }
}

}  // namespace rlpc::simd

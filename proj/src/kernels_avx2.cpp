#include "svar/kernels.hpp"

#if SVAR_HAVE_AVX2_KERNELS
#include <immintrin.h>

namespace svar::kernels {
namespace {

// x < 2^32, p < 2^16, m = floor(2^32 / p). Returns x mod p.
inline __m256i barrett_reduce(__m256i x, __m256i m, __m256i pv) {
  __m256i q_even = _mm256_srli_epi64(_mm256_mul_epu32(x, m), 32);
  __m256i q_odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), m);
  q_odd = _mm256_and_si256(q_odd, _mm256_set1_epi64x(static_cast<long long>(0xFFFFFFFF00000000ULL)));
  __m256i q = _mm256_or_si256(q_even, q_odd);
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, pv));
  // r in [0, 2p)
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, pv));
}

}  // namespace

void axpy_avx2(Elem* dst, const Elem* src, Elem c, std::size_t n, std::uint32_t p) {
  if (p >= (1u << 16)) {
    axpy_scalar(dst, src, c, n, p);
    return;
  }
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i m = _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>((1ULL << 32) / p)));
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    // c*s < (2^16)^2 - 2^17 + 1, so c*s + d < 2^32
    __m256i x = _mm256_add_epi32(_mm256_mullo_epi32(cv, s), d);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), barrett_reduce(x, m, pv));
  }
  if (i < n) axpy_scalar(dst + i, src + i, c, n - i, p);
}

void scale_avx2(Elem* x, Elem c, std::size_t n, std::uint32_t p) {
  if (p >= (1u << 16)) {
    scale_scalar(x, c, n, p);
    return;
  }
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i m = _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>((1ULL << 32) / p)));
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(x + i), barrett_reduce(_mm256_mullo_epi32(cv, v), m, pv));
  }
  if (i < n) scale_scalar(x + i, c, n - i, p);
}

}  // namespace svar::kernels
#endif

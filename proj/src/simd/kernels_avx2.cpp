#include <immintrin.h>

#include "raag/simd/kernels.hpp"

namespace raag::simd::avx2 {

namespace {

// x < 2^23: quotient from a float reciprocal is off by at most one, fixed below.
inline __m256i reduce(__m256i x, __m256 inv, __m256i q) {
  __m256 xf = _mm256_cvtepi32_ps(x);
  __m256i quot = _mm256_cvttps_epi32(_mm256_mul_ps(xf, inv));
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(quot, q));
  __m256i neg = _mm256_cmpgt_epi32(_mm256_setzero_si256(), r);
  r = _mm256_add_epi32(r, _mm256_and_si256(neg, q));
  __m256i big = _mm256_cmpgt_epi32(r, _mm256_sub_epi32(q, _mm256_set1_epi32(1)));
  return _mm256_sub_epi32(r, _mm256_and_si256(big, q));
}

}  // namespace

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t factor,
              std::uint32_t modulus) {
  const __m256i q = _mm256_set1_epi32(static_cast<int>(modulus));
  const __m256i f = _mm256_set1_epi32(static_cast<int>(factor));
  const __m256 inv = _mm256_set1_ps(1.0f / static_cast<float>(modulus));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, f));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce(x, inv, q));
  }
  scalar::axpy_mod(dst + i, src + i, n - i, factor, modulus);
}

void scale_mod(std::uint32_t* row, std::size_t n, std::uint32_t factor, std::uint32_t modulus) {
  const __m256i q = _mm256_set1_epi32(static_cast<int>(modulus));
  const __m256i f = _mm256_set1_epi32(static_cast<int>(factor));
  const __m256 inv = _mm256_set1_ps(1.0f / static_cast<float>(modulus));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + i), reduce(_mm256_mullo_epi32(r, f), inv, q));
  }
  scalar::scale_mod(row + i, n - i, factor, modulus);
}

}  // namespace raag::simd::avx2

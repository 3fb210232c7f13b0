#include <arm_neon.h>

#include "raag/simd/kernels.hpp"

namespace raag::simd::neon {

namespace {

inline uint32x4_t reduce(uint32x4_t x, float32x4_t inv, uint32x4_t q) {
  uint32x4_t quot = vcvtq_u32_f32(vmulq_f32(vcvtq_f32_u32(x), inv));
  int32x4_t r = vreinterpretq_s32_u32(vsubq_u32(x, vmulq_u32(quot, q)));
  int32x4_t qs = vreinterpretq_s32_u32(q);
  r = vaddq_s32(r, vandq_s32(vreinterpretq_s32_u32(vcltq_s32(r, vdupq_n_s32(0))), qs));
  r = vsubq_s32(r, vandq_s32(vreinterpretq_s32_u32(vcgeq_s32(r, qs)), qs));
  return vreinterpretq_u32_s32(r);
}

}  // namespace

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t factor,
              std::uint32_t modulus) {
  const uint32x4_t q = vdupq_n_u32(modulus);
  const float32x4_t inv = vdupq_n_f32(1.0f / static_cast<float>(modulus));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t x = vmlaq_n_u32(vld1q_u32(dst + i), vld1q_u32(src + i), factor);
    vst1q_u32(dst + i, reduce(x, inv, q));
  }
  scalar::axpy_mod(dst + i, src + i, n - i, factor, modulus);
}

void scale_mod(std::uint32_t* row, std::size_t n, std::uint32_t factor, std::uint32_t modulus) {
  const uint32x4_t q = vdupq_n_u32(modulus);
  const float32x4_t inv = vdupq_n_f32(1.0f / static_cast<float>(modulus));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) vst1q_u32(row + i, reduce(vmulq_n_u32(vld1q_u32(row + i), factor), inv, q));
  scalar::scale_mod(row + i, n - i, factor, modulus);
}

}  // namespace raag::simd::neon

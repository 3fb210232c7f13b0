#include "raag/simd/kernels.hpp"

namespace raag::simd::scalar {

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t factor,
              std::uint32_t modulus) {
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>((dst[i] + std::uint64_t{factor} * src[i]) % modulus);
}

void scale_mod(std::uint32_t* row, std::size_t n, std::uint32_t factor, std::uint32_t modulus) {
  for (std::size_t i = 0; i < n; ++i) row[i] = static_cast<std::uint32_t>(std::uint64_t{factor} * row[i] % modulus);
}

}  // namespace raag::simd::scalar

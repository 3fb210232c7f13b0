#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace raag::simd {

// Vector kernels require modulus <= kVectorModulusLimit so that every
// intermediate fits a float mantissa; larger moduli always take the scalar path.
inline constexpr std::uint32_t kVectorModulusLimit = 1u << 11;

enum class Isa { Scalar, Avx2, Neon };

// dst[i] = (dst[i] + factor * src[i]) mod modulus, inputs already reduced.
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t modulus);
// row[i] = (row[i] * factor) mod modulus
void scale_mod(std::span<std::uint32_t> row, std::uint32_t factor, std::uint32_t modulus);

Isa active_isa();
std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);
// For tests and benchmarks; throws if the ISA is not available.
void force_isa(Isa isa);

namespace scalar {
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t factor,
              std::uint32_t modulus);
void scale_mod(std::uint32_t* row, std::size_t n, std::uint32_t factor, std::uint32_t modulus);
}  // namespace scalar

namespace avx2 {
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t factor,
              std::uint32_t modulus);
void scale_mod(std::uint32_t* row, std::size_t n, std::uint32_t factor, std::uint32_t modulus);
}  // namespace avx2

namespace neon {
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t factor,
              std::uint32_t modulus);
void scale_mod(std::uint32_t* row, std::size_t n, std::uint32_t factor, std::uint32_t modulus);
}  // namespace neon

}  // namespace raag::simd

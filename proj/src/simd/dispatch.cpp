#include <atomic>
#include <stdexcept>

#include "raag/simd/kernels.hpp"

namespace raag::simd {

namespace {

Isa detect() {
#if defined(RAAG_HAVE_AVX2)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#elif defined(RAAG_HAVE_NEON)
  return Isa::Neon;
#endif
  return Isa::Scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(RAAG_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(RAAG_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

void force_isa(Isa isa) {
  if (!isa_available(isa)) throw std::runtime_error("instruction set not available on this machine");
  current().store(isa, std::memory_order_relaxed);
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t modulus) {
  if (dst.size() != src.size()) throw std::invalid_argument("axpy_mod length mismatch");
  if (modulus <= kVectorModulusLimit) {
    switch (active_isa()) {
#if defined(RAAG_HAVE_AVX2)
      case Isa::Avx2: return avx2::axpy_mod(dst.data(), src.data(), dst.size(), factor, modulus);
#endif
#if defined(RAAG_HAVE_NEON)
      case Isa::Neon: return neon::axpy_mod(dst.data(), src.data(), dst.size(), factor, modulus);
#endif
      default: break;
    }
  }
  scalar::axpy_mod(dst.data(), src.data(), dst.size(), factor, modulus);
}

void scale_mod(std::span<std::uint32_t> row, std::uint32_t factor, std::uint32_t modulus) {
  if (modulus <= kVectorModulusLimit) {
    switch (active_isa()) {
#if defined(RAAG_HAVE_AVX2)
      case Isa::Avx2: return avx2::scale_mod(row.data(), row.size(), factor, modulus);
#endif
#if defined(RAAG_HAVE_NEON)
      case Isa::Neon: return neon::scale_mod(row.data(), row.size(), factor, modulus);
#endif
      default: break;
    }
  }
  scalar::scale_mod(row.data(), row.size(), factor, modulus);
}

}  // namespace raag::simd

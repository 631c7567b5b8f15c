#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "vsckin/simd/kernels.hpp"

namespace vsckin::simd {

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
    case Isa::kNeon:
      return "neon";
  }
  return "?";
}

std::optional<Isa> parse_isa(std::string_view text) {
  if (text == "scalar") return Isa::kScalar;
  if (text == "avx2") return Isa::kAvx2;
  if (text == "neon") return Isa::kNeon;
  return std::nullopt;
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(VSCKIN_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(VSCKIN_HAVE_NEON)
      return true;  // mandatory on aarch64
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& kernels(Isa isa) {
  if (!isa_available(isa)) {
    throw std::invalid_argument("SIMD variant '" + std::string(to_string(isa)) +
                                "' is not available on this build/CPU");
  }
  switch (isa) {
#if defined(VSCKIN_HAVE_AVX2)
    case Isa::kAvx2:
      return detail::kAvx2Kernels;
#endif
#if defined(VSCKIN_HAVE_NEON)
    case Isa::kNeon:
      return detail::kNeonKernels;
#endif
    default:
      return detail::kScalarKernels;
  }
}

Isa detect_isa() {
  if (isa_available(Isa::kAvx2)) return Isa::kAvx2;
  if (isa_available(Isa::kNeon)) return Isa::kNeon;
  return Isa::kScalar;
}

namespace {

const KernelTable* initial_table() {
  if (const char* env = std::getenv("VSCKIN_SIMD")) {
    if (auto isa = parse_isa(env); isa && isa_available(*isa)) return &kernels(*isa);
  }
  return &kernels(detect_isa());
}

std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{initial_table()};
  return slot;
}

}  // namespace

const KernelTable& active_kernels() { return *active_slot().load(std::memory_order_acquire); }

void set_active_isa(Isa isa) { active_slot().store(&kernels(isa), std::memory_order_release); }

}  // namespace vsckin::simd

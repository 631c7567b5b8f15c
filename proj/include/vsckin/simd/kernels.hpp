#pragma once

// Dense double-precision kernels behind the propagator's matrix algebra.
//
// Every kernel exists as a portable scalar reference plus optional
// vector variants (AVX2+FMA on x86-64, NEON on aarch64). The variant is
// chosen once at startup from CPU features; VSCKIN_SIMD=scalar|avx2|neon in
// the environment overrides the choice. Vector variants fuse multiply-adds
// and reorder reductions, so they agree with the scalar reference to a few
// ulps rather than bit-for-bit.

#include <cstddef>
#include <optional>
#include <string_view>

namespace vsckin::simd {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view to_string(Isa isa);
std::optional<Isa> parse_isa(std::string_view text);

struct KernelTable {
  Isa isa;
  /// C (rows x inner) * (inner x cols) -> C (rows x cols); row-major, C overwritten.
  void (*gemm)(std::size_t rows, std::size_t inner, std::size_t cols, const double* a,
               const double* b, double* c);
  /// y = A x for row-major A (rows x cols).
  void (*gemv)(std::size_t rows, std::size_t cols, const double* a, const double* x, double* y);
  /// y += alpha * x.
  void (*axpy)(std::size_t n, double alpha, const double* x, double* y);
  /// y = alpha * x.
  void (*scale)(std::size_t n, double alpha, const double* x, double* y);
};

/// True if the variant was compiled in and the CPU supports it.
bool isa_available(Isa isa);

/// Kernel table for a specific variant; throws std::invalid_argument if unavailable.
const KernelTable& kernels(Isa isa);

/// Table used by the library's matrix routines.
const KernelTable& active_kernels();

/// Overrides the active variant (tests, CLI). Throws if unavailable.
void set_active_isa(Isa isa);

/// Best variant the running CPU supports.
Isa detect_isa();

namespace detail {
extern const KernelTable kScalarKernels;
#if defined(VSCKIN_HAVE_AVX2)
extern const KernelTable kAvx2Kernels;
#endif
#if defined(VSCKIN_HAVE_NEON)
extern const KernelTable kNeonKernels;
#endif
}  // namespace detail

}  // namespace vsckin::simd

#include <arm_neon.h>

#include "vsckin/simd/kernels.hpp"

namespace vsckin::simd {
namespace {

void gemm_neon(std::size_t rows, std::size_t inner, std::size_t cols, const double* a,
               const double* b, double* c) {
  for (std::size_t i = 0; i < rows * cols; ++i) c[i] = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    double* ci = c + i * cols;
    for (std::size_t k = 0; k < inner; ++k) {
      const double aik = a[i * inner + k];
      if (aik == 0.0) continue;
      const float64x2_t av = vdupq_n_f64(aik);
      const double* bk = b + k * cols;
      std::size_t j = 0;
      for (; j + 2 <= cols; j += 2) {
        vst1q_f64(ci + j, vfmaq_f64(vld1q_f64(ci + j), av, vld1q_f64(bk + j)));
      }
      for (; j < cols; ++j) ci[j] += aik * bk[j];
    }
  }
}

void gemv_neon(std::size_t rows, std::size_t cols, const double* a, const double* x,
               double* y) {
  for (std::size_t i = 0; i < rows; ++i) {
    const double* ai = a + i * cols;
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t j = 0;
    for (; j + 2 <= cols; j += 2) acc = vfmaq_f64(acc, vld1q_f64(ai + j), vld1q_f64(x + j));
    double sum = vaddvq_f64(acc);
    for (; j < cols; ++j) sum += ai[j] * x[j];
    y[i] = sum;
  }
}

void axpy_neon(std::size_t n, double alpha, const double* x, double* y) {
  const float64x2_t av = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), av, vld1q_f64(x + i)));
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_neon(std::size_t n, double alpha, const double* x, double* y) {
  const float64x2_t av = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(y + i, vmulq_f64(av, vld1q_f64(x + i)));
  for (; i < n; ++i) y[i] = alpha * x[i];
}

}  // namespace

namespace detail {
const KernelTable kNeonKernels{Isa::kNeon, gemm_neon, gemv_neon, axpy_neon, scale_neon};
}  // namespace detail

}  // namespace vsckin::simd

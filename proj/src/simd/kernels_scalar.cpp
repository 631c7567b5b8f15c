#include "vsckin/simd/kernels.hpp"

namespace vsckin::simd {
namespace {

void gemm_scalar(std::size_t rows, std::size_t inner, std::size_t cols, const double* a,
                 const double* b, double* c) {
  for (std::size_t i = 0; i < rows * cols; ++i) c[i] = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    double* ci = c + i * cols;
    for (std::size_t k = 0; k < inner; ++k) {
      const double aik = a[i * inner + k];
      if (aik == 0.0) continue;
      const double* bk = b + k * cols;
      for (std::size_t j = 0; j < cols; ++j) ci[j] += aik * bk[j];
    }
  }
}

void gemv_scalar(std::size_t rows, std::size_t cols, const double* a, const double* x,
                 double* y) {
  for (std::size_t i = 0; i < rows; ++i) {
    const double* ai = a + i * cols;
    double sum = 0.0;
    for (std::size_t j = 0; j < cols; ++j) sum += ai[j] * x[j];
    y[i] = sum;
  }
}

void axpy_scalar(std::size_t n, double alpha, const double* x, double* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_scalar(std::size_t n, double alpha, const double* x, double* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] = alpha * x[i];
}

}  // namespace

namespace detail {
const KernelTable kScalarKernels{Isa::kScalar, gemm_scalar, gemv_scalar, axpy_scalar,
                                 scale_scalar};
}  // namespace detail

}  // namespace vsckin::simd
